#!/usr/bin/env python
import sys

from fapk.cli import main

if __name__ == '__main__':
    main(sys.argv)
