"""Tests for group file I/O."""
