"""Reading and writing group files.

Format (UTF-8, line based)::

    # comment
    name S3            (optional, anywhere)
    degree 3           (exactly once, before any gen line)
    gen (1 2)
    gen (1 2 3)
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from ..core.stab_chain import PermGroup
from ..errors import CycleNotationError, GroupFileError
from ..models.permutation import Permutation
from ..utils.cycle_notation import CycleNotation


logger = logging.getLogger(__name__)


@dataclass
class GroupFile:
    """Parsed contents of a group file."""

    degree: int
    generators: list[str] = field(default_factory=list)
    name: Optional[str] = None

    @classmethod
    def parse(cls, text: str) -> "GroupFile":
        """
        Parse group file text.

        Raises:
            GroupFileError: With the offending line number
        """
        degree: Optional[int] = None
        name: Optional[str] = None
        generators: list[str] = []

        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            keyword, _, rest = line.partition(" ")
            rest = rest.strip()

            if keyword == "name":
                if name is not None:
                    raise GroupFileError("name declared twice", number)
                name = rest or None
            elif keyword == "degree":
                if degree is not None:
                    raise GroupFileError("degree declared twice", number)
                if not (rest.isascii() and rest.isdigit()) or int(rest) < 1:
                    raise GroupFileError(f"degree must be a positive integer, got {rest!r}", number)
                degree = int(rest)
            elif degree is None:
                raise GroupFileError("'degree N' must come first", number)
            elif keyword == "gen":
                try:
                    CycleNotation.parse(rest, degree)
                except CycleNotationError as e:
                    raise GroupFileError(str(e), number) from e
                generators.append(rest)
            else:
                raise GroupFileError(f"unknown keyword {keyword!r}", number)

        if degree is None:
            raise GroupFileError("missing 'degree N' line")
        return cls(degree=degree, generators=generators, name=name)

    def permutations(self) -> list[Permutation]:
        return [CycleNotation.parse(text, self.degree) for text in self.generators]

    def to_group(self) -> PermGroup:
        return PermGroup(self.degree, self.permutations())

    @classmethod
    def from_group(cls, group: PermGroup, name: Optional[str] = None) -> "GroupFile":
        return cls(group.degree, [str(g) for g in group.generators], name)

    def to_text(self) -> str:
        lines = []
        if self.name:
            lines.append(f"name {self.name}")
        lines.append(f"degree {self.degree}")
        lines.extend(f"gen {g}" for g in self.generators)
        return "\n".join(lines) + "\n"


def parse_group_file(path: Path) -> PermGroup:
    """
    Load a group from a file.

    Raises:
        GroupFileError: If the file is missing or malformed
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise GroupFileError(f"cannot read {path}: {e}") from e
    group = GroupFile.parse(text).to_group()
    logger.debug(f"Loaded {path}: degree {group.degree}, {len(group.generators)} generators")
    return group


def write_group_file(path: Path, group: PermGroup, name: Optional[str] = None) -> Path:
    """Write a group in the group file format, creating parent directories."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(GroupFile.from_group(group, name).to_text(), encoding="utf-8")
    return path
