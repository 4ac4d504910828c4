"""Residual-scan kernels for the brute-force solver.

``_scan`` is the compiled extension; ``_scan_py`` is the reference
implementation with the same signature.  :mod:`ybme.oracle` picks one at
import time.
"""
