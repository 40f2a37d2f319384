"""Allow running with: python -m gauss_homotopy"""
from .cli import main

main()
