"""
Init module
"""
