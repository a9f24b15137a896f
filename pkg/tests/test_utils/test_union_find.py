"""Tests for the union-find helper."""

from sigmaperm.utils.union_find import UnionFind


def test_starts_with_singletons():
    uf = UnionFind([2, 3, 5])
    assert uf.n_clusters == 3
    assert uf.components() == [[2], [3], [5]]


def test_union_merges_once():
    uf = UnionFind([2, 3, 5, 7])
    assert uf.union(2, 5) is True
    assert uf.union(5, 2) is False
    assert uf.find(2) == uf.find(5)
    assert uf.n_clusters == 3


def test_components_sorted():
    uf = UnionFind([11, 7, 5, 3, 2])
    uf.union(11, 3)
    uf.union(7, 2)
    assert uf.components() == [[2, 7], [3, 11], [5]]
    assert repr(uf) == "UnionFind: contains 3 clusters."


def test_tuple_items():
    uf = UnionFind([(2,), (3,), (5, 7)])
    uf.union((3,), (5, 7))
    assert uf.components() == [[(2,)], [(3,), (5, 7)]]
