"""Ensures the tests directory itself is importable (shared frozen values)."""

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))
