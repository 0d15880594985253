"""
Utility modules for ufg-depth.
"""
