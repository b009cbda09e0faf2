import random

import pytest

from tg_embeddings import errors as err
from tg_embeddings.embedder import UniversalWords as uw
from tg_embeddings.library import WordLib
from tg_embeddings.library.test.RandomWords import random_product, random_reduced_word
from tg_embeddings.types import Generator
from tg_embeddings.verifier import SubgroupGraph
from tg_embeddings.verifier.test.GraphOracles import isomorphic, to_networkx
from tg_embeddings.verifier.test.MembershipOracles import closed_path_labels, products_up_to, subgroup_contains

x = WordLib.gen("x")
y = WordLib.gen("y")
XY = [Generator("x"), Generator("y")]


def folded(*words):
    return SubgroupGraph.fold(SubgroupGraph.build_graph(list(words)))


class TestBuildGraph:
    def test_wedge_of_loops(self):
        g = SubgroupGraph.build_graph([WordLib.mul(x, y), WordLib.pow(x, 3)])
        assert len(g.vertices) == 4
        assert len(g.edges) == 5
        assert not g.folded

    def test_empty_words_dropped(self):
        g = SubgroupGraph.build_graph([WordLib.IDENTITY, x])
        assert len(g.edges) == 1

    def test_alphabet(self):
        with pytest.raises(err.GraphError, match=err.GRAPH_WORD_OUTSIDE_ALPHABET):
            SubgroupGraph.build_graph([y], [Generator("x")])


class TestFold:
    def test_conjugate_folds_to_lollipop(self):
        g = folded(WordLib.conj(y, WordLib.inv(x)))
        assert len(g.vertices) == 2
        assert SubgroupGraph.rank(g) == 1

    def test_powers_fold_to_their_gcd(self):
        g = folded(WordLib.pow(x, 2), WordLib.pow(x, 3))
        assert SubgroupGraph.rank(g) == 1
        assert SubgroupGraph.member(g, x)

    def test_unfolded_rank(self):
        with pytest.raises(err.GraphError, match=err.GRAPH_NOT_FOLDED):
            SubgroupGraph.rank(SubgroupGraph.build_graph([x]))

    def test_order_independent(self):
        rng = random.Random(11)
        for _ in range(100):
            words = [random_reduced_word(rng, XY, rng.randint(1, 8)) for _ in range(3)]
            g = SubgroupGraph.build_graph(words)
            reference = SubgroupGraph.fold(g)
            for seed in range(5):
                shuffled = SubgroupGraph.fold(g, random.Random(seed))
                assert shuffled == reference
                assert isomorphic(shuffled, reference)

    def test_networkx_export(self):
        graph = to_networkx(folded(WordLib.mul(x, y)))
        assert graph.number_of_nodes() == 2
        assert sorted(label for _, _, label in graph.edges(data="label")) == ["x", "y"]
        assert graph.nodes[0]["basepoint"]


class TestRank:
    def test_free_basis(self):
        assert SubgroupGraph.is_free_basis([x, y])
        assert SubgroupGraph.is_free_basis([WordLib.mul(x, y), WordLib.mul(y, x)])

    def test_dependent_words(self):
        assert not SubgroupGraph.is_free_basis([x, x])
        assert not SubgroupGraph.is_free_basis([x, y, WordLib.mul(x, y)])
        assert not SubgroupGraph.is_free_basis([])

    def test_universal_words(self):
        for n in range(1, 7):
            assert SubgroupGraph.rank(folded(*(uw.universal_word(i) for i in range(1, n + 1)))) == n


class TestMember:
    def test_member(self):
        g = folded(WordLib.pow(x, 2), y)
        assert SubgroupGraph.member(g, WordLib.mul(y, WordLib.pow(x, -4), y))
        assert not SubgroupGraph.member(g, x)
        assert SubgroupGraph.member(g, WordLib.IDENTITY)

    def test_letter_outside_alphabet(self):
        with pytest.raises(err.GraphError):
            SubgroupGraph.member(folded(x), y)

    def test_products_are_members(self):
        words = [WordLib.mul(x, y, x), WordLib.pow(y, 2), WordLib.comm(x, y)]
        g = folded(*words)
        for product in products_up_to(words, 3):
            assert SubgroupGraph.member(g, product)

    def test_agrees_with_path_oracle(self):
        rng = random.Random(5)
        for _ in range(300):
            words = [random_reduced_word(rng, XY, rng.randint(2, 4)) for _ in range(rng.randint(1, 2))]
            g = SubgroupGraph.fold(SubgroupGraph.build_graph(words, XY))
            labels = closed_path_labels(words)
            assert all(SubgroupGraph.member(g, label) for label in labels)
            inside = random_product(rng, words, rng.randint(1, 3))
            assert SubgroupGraph.member(g, inside)
            assert inside in labels
            candidate = random_reduced_word(rng, XY, rng.randint(1, 6))
            if not SubgroupGraph.member(g, candidate):
                assert candidate not in labels

    def test_path_oracle_rejects(self):
        words = [WordLib.pow(x, 2), y]
        assert subgroup_contains(words, WordLib.mul(y, WordLib.pow(x, -4), y))
        assert not subgroup_contains(words, x)
        assert not subgroup_contains(words, WordLib.mul(x, y, x))
