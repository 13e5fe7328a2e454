"""
Main Application class for the character-sum lab
Parses the charlab command line, dispatches to experiments and suites, and maps
outcomes to exit codes
"""

import argparse
import logging
import math
import sys
from typing import List, Optional

from config import config, Config, Scan
from numtheory.characters import character_by_index
from numtheory.charsums import partial_sums, polya_vinogradov_ratio
from numtheory.errors import CharLabError, DomainError, UsageError
from services.experiments import delta, paley_running_max, paley_scan, scan_odd_order
from services.verification_suites import run_all, run_suite, suite_names
from ui.report_writer import ReportWriter, render_suite, status_line

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class CharLabApp:
    """
    charlab command-line application
    """

    def __init__(self, settings: Optional[Config] = None):
        self.config = settings or config
        self.parser = self._build_parser()

    def _build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="charlab",
            description="Numerical experiments on Dirichlet character sums",
        )
        parser.add_argument("--verbose", "-v", action="store_true", help="log progress at INFO level")
        parser.add_argument("--quiet", "-q", action="store_true", help="log errors only")
        commands = parser.add_subparsers(dest="command", required=True)

        p = commands.add_parser("delta", help="print δ_g = 1 - (g/π) sin(π/g)")
        p.add_argument("--g", type=int, required=True)

        p = commands.add_parser("scan", help="odd-order character family scan")
        p.add_argument("--order", type=int, default=self.config.get('scan.order', Scan.ORDER))
        p.add_argument("--qmin", type=int, default=self.config.get('scan.q_min', Scan.Q_MIN))
        p.add_argument("--qmax", type=int, default=self.config.get('scan.q_max', Scan.Q_MAX))
        p.add_argument("--psi-max", type=int,
                       default=self.config.get('scan.psi_conductor_max', Scan.PSI_CONDUCTOR_MAX))
        self._add_output_arguments(p)

        p = commands.add_parser("paley", help="quadratic character scan over primes")
        p.add_argument("--qmax", type=int, default=self.config.get('scan.paley_q_max', Scan.PALEY_Q_MAX))
        p.add_argument("--psi-max", type=int,
                       default=self.config.get('scan.psi_conductor_max', Scan.PSI_CONDUCTOR_MAX))
        self._add_output_arguments(p)

        p = commands.add_parser("verify", help="run a verification suite")
        p.add_argument("--suite", required=True)
        p.add_argument("--seed", type=int, default=None)

        p = commands.add_parser("msum", help="M(χ) for one character")
        p.add_argument("--modulus", type=int, required=True)
        p.add_argument("--char-index", type=int, required=True)

        commands.add_parser("suites", help="list suite names")
        return parser

    def _add_output_arguments(self, p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "json"), default=self.config.get('output.format', "csv"))
        p.add_argument("--out", default=None, help="output file (default: stdout)")
        p.add_argument("--threads", type=int, default=None, help="worker processes; 0 uses every CPU")
        p.add_argument("--epsilon", type=float, default=self.config.get('scan.epsilon', Scan.EPSILON))

    def _configure_logging(self, args: argparse.Namespace) -> None:
        level = self.config.get('logging.level', "WARNING")
        if args.verbose:
            level = "INFO"
        if args.quiet:
            level = "ERROR"
        logging.basicConfig(
            level=getattr(logging, str(level).upper(), logging.WARNING),
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
            stream=sys.stderr,
        )

    def run(self, argv: Optional[List[str]] = None) -> int:
        """Parse arguments and run one command; returns the exit code"""
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return EXIT_OK if e.code in (0, None) else EXIT_USAGE

        self._configure_logging(args)
        handler = getattr(self, f"_cmd_{args.command}")
        try:
            return handler(args)
        except (UsageError, DomainError) as e:
            print(f"✗ {e}", file=sys.stderr)
            return EXIT_USAGE
        except CharLabError as e:
            print(f"✗ {e}", file=sys.stderr)
            return EXIT_FAILURE
        except KeyboardInterrupt:
            print("\nInterrupted by user", file=sys.stderr)
            return EXIT_FAILURE
        except Exception:
            logger.exception("unexpected error in %s", args.command)
            return EXIT_FAILURE

    # Commands

    def _cmd_delta(self, args: argparse.Namespace) -> int:
        print(f"{delta(args.g):.12g}")
        return EXIT_OK

    def _cmd_scan(self, args: argparse.Namespace) -> int:
        if args.qmin > args.qmax:
            raise UsageError(f"--qmin {args.qmin} exceeds --qmax {args.qmax}")
        records = scan_odd_order(args.order, args.qmin, args.qmax, args.psi_max, args.threads, args.epsilon)
        self._emit(records, args)
        return EXIT_OK

    def _cmd_paley(self, args: argparse.Namespace) -> int:
        if args.qmax < Scan.PALEY_Q_MIN:
            raise UsageError(f"--qmax must be >= {Scan.PALEY_Q_MIN}, got {args.qmax}")
        records = paley_scan(args.qmax, args.psi_max, args.threads, args.epsilon)
        self._emit(records, args)
        running = paley_running_max(records)
        if running:
            q, value = running[-1]
            logger.info("running max of M/(√q log log q) up to q=%d: %.6g", q, value)
        return EXIT_OK

    def _cmd_verify(self, args: argparse.Namespace) -> int:
        seed = self.config.seed if args.seed is None else args.seed
        reports = run_all(seed) if args.suite == "all" else [run_suite(args.suite, seed)]
        for report in reports:
            print(render_suite(report))
        return EXIT_OK if all(r.ok for r in reports) else EXIT_FAILURE

    def _cmd_msum(self, args: argparse.Namespace) -> int:
        chi = character_by_index(args.modulus, args.char_index)
        if chi.is_principal:
            raise DomainError(f"character {args.char_index} mod {args.modulus} is principal; M(χ) is unbounded")
        trace = partial_sums(chi, chi.q)
        M = trace.max_abs()
        print(f"character      {chi.label}")
        print(f"order          {chi.order}")
        print(f"parity         {chi.parity}")
        print(f"conductor      {chi.conductor}")
        print(f"M              {M:.12g}")
        print(f"argmax t       {trace.argmax_abs()}")
        print(f"M/sqrt(q)      {M / math.sqrt(chi.q):.12g}")
        if chi.q > 2:
            print(f"M/(sqrt(q)log q) {polya_vinogradov_ratio(chi):.12g}")
        return EXIT_OK

    def _cmd_suites(self, args: argparse.Namespace) -> int:
        for name in suite_names():
            print(name)
        return EXIT_OK

    def _emit(self, records, args: argparse.Namespace) -> None:
        writer = ReportWriter(args.format)
        if args.out:
            writer.save(records, args.out)
            print(status_line(True, f"Wrote {len(records)} records to {args.out}"), file=sys.stderr)
        else:
            writer.write(records, sys.stdout)
        if not records:
            print(status_line(True, "no moduli in range", warning=True), file=sys.stderr)


def main():
    """Main entry point"""
    app = CharLabApp()
    exit_code = app.run()
    sys.exit(exit_code)


if __name__ == "__main__":
    main()
