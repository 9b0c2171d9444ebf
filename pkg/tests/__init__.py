"""Tests for the clawfree package"""
