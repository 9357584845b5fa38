"""Shared utilities and configurations."""
