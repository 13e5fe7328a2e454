#!/usr/bin/env python3
"""
charlab - Main Entry Point
"""

import sys
import os

# Add current directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))


def main():
    """
    Main entry point for the application
    """
    try:
        from app import main as app_main
        app_main()
    except ImportError as e:
        print(f"Error importing application: {e}", file=sys.stderr)
        print("Please ensure all required modules are installed (./run.sh install).", file=sys.stderr)
        sys.exit(1)
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
