"""Exact verification toolkit for lines on the Dwork pencil of quintic threefolds."""
__version__ = "0.1.0"
