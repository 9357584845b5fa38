"""Presentation schemas for CLI reports."""
