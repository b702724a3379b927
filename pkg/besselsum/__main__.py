#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Entry point for running besselsum as a module: python -m besselsum
"""

from besselsum.cli import main

if __name__ == "__main__":
    main()
