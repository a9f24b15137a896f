"""Group file reading and writing."""

from .group_file import GroupFile, parse_group_file, write_group_file

__all__ = ["GroupFile", "parse_group_file", "write_group_file"]
