"""
Application entry point.
Run this file to use the infofid command line, e.g.

    python run.py report --dim 2,4 --rank all
"""
import os
import sys

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from infofid.app import main

if __name__ == '__main__':
    sys.exit(main())
