"""Tests for the group-theory core."""
