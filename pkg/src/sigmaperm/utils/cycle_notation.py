"""Parse and print permutations in cycle notation."""

import re

from ..errors import CycleNotationError
from ..models.permutation import Permutation


class CycleNotation:
    """Converts between cycle-notation text and :class:`Permutation`.

    Grammar: ``perm := "()" | cycle+``, ``cycle := "(" int (" " int)* ")"``.
    Whitespace between cycles is ignored; commas inside a cycle are accepted
    as separators.
    """

    # One parenthesised group with its contents, or any stray character
    TOKEN_PATTERN = re.compile(r"\(([^()]*)\)|(\S)")
    SEPARATOR_PATTERN = re.compile(r"[\s,]+")

    @staticmethod
    def parse(text: str, degree: int) -> Permutation:
        """
        Parse cycle notation over the points 1..degree.

        Args:
            text: Cycle notation such as "(1 2)(3 4 5)"; "()" or "" is the identity
            degree: Degree of the resulting permutation

        Returns:
            The product of the listed disjoint cycles

        Raises:
            CycleNotationError: On malformed parentheses, points out of range
                or repeated points

        Examples:
            >>> str(CycleNotation.parse("(1 2 3)", 3))
            '(1 2 3)'
            >>> CycleNotation.parse("()", 5).is_identity()
            True
        """
        if degree < 1:
            raise CycleNotationError(f"degree must be positive, got {degree}")

        cycles: list[list[int]] = []
        seen: set[int] = set()
        for match in CycleNotation.TOKEN_PATTERN.finditer(text):
            stray = match.group(2)
            if stray is not None:
                raise CycleNotationError(
                    f"unexpected {stray!r} in cycle notation {text!r}"
                )
            body = match.group(1).strip()
            if not body:
                continue
            cycle: list[int] = []
            for token in CycleNotation.SEPARATOR_PATTERN.split(body):
                if not (token.isascii() and token.isdigit()):
                    raise CycleNotationError(f"bad point {token!r} in {text!r}")
                point = int(token)
                if not 1 <= point <= degree:
                    raise CycleNotationError(
                        f"point {point} out of range 1..{degree} in {text!r}"
                    )
                if point in seen:
                    raise CycleNotationError(f"point {point} repeated in {text!r}")
                seen.add(point)
                cycle.append(point)
            cycles.append(cycle)

        return Permutation.from_cycles(cycles, degree)

    @staticmethod
    def format(p: Permutation) -> str:
        """
        Canonical cycle notation: nontrivial cycles only, each starting at its
        least point, sorted by that point; the identity prints as "()".

        Examples:
            >>> CycleNotation.format(Permutation.from_images([2, 1, 4, 5, 3]))
            '(1 2)(3 4 5)'
        """
        cycles = p.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def parse_cycles(text: str, degree: int) -> Permutation:
    return CycleNotation.parse(text, degree)


def format_cycles(p: Permutation) -> str:
    return CycleNotation.format(p)
