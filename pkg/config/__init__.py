from .config import config_instance as config, Config, Limits, Tolerances, Grid, Scan, Suites, Output, Performance
