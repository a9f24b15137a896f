"""Union-find over hashable, orderable items."""

from typing import Generic, Hashable, Iterable, TypeVar

T = TypeVar("T", bound=Hashable)


class UnionFind(Generic[T]):
    """Disjoint sets with union by rank and path compression.

    Args:
        items: The elements; each starts in its own set
    """

    def __init__(self, items: Iterable[T]):
        self._leader: dict[T, T] = {item: item for item in items}
        self._rank: dict[T, int] = {item: 0 for item in self._leader}
        self.n_clusters = len(self._leader)

    def __repr__(self) -> str:
        return f"UnionFind: contains {self.n_clusters} clusters."

    def find(self, item: T) -> T:
        """Leader of the set containing ``item``."""
        path = [item]
        parent = self._leader[item]
        while parent != self._leader[parent]:
            path.append(parent)
            parent = self._leader[parent]
        for node in path:
            self._leader[node] = parent
        return parent

    def union(self, a: T, b: T) -> bool:
        """Merge the sets of ``a`` and ``b``; False if already merged."""
        s1, s2 = self.find(a), self.find(b)
        if s1 == s2:
            return False
        r1, r2 = self._rank[s1], self._rank[s2]
        if r2 > r1:
            s1, s2 = s2, s1
        elif r1 == r2:
            self._rank[s1] += 1
        self._leader[s2] = s1
        self.n_clusters -= 1
        return True

    def components(self) -> list[list[T]]:
        """Connected components, each sorted, ordered by least member."""
        groups: dict[T, list[T]] = {}
        for item in self._leader:
            groups.setdefault(self.find(item), []).append(item)
        return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])
