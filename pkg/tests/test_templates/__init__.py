"""Tests for report rendering."""
