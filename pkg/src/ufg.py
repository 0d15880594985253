#!/usr/bin/env python
"""
ufg-depth - Main entry point
"""
import sys

from ufgdepth.cli import main

if __name__ == "__main__":
    sys.exit(main())
