"""Tests for the qtoric toolkit."""
