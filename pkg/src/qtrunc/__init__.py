"""Exact truncated q-series: partition tables, identity checks, inequality scans."""

__version__ = "0.1.0"
