"""Core package for clawfree"""
