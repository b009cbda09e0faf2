import logging
import random

import pytest

from tg_embeddings import errors as err
from tg_embeddings.library import WordLib
from tg_embeddings.presentation import Examples
from tg_embeddings.presentation.Presentation import instantiate, iter_assignments
from tg_embeddings.presentation.PresentationParser import parse
from tg_embeddings.presentation.test.RandomPresentations import random_presentation
from tg_embeddings.types import Generator, ParamBound, ParamRange


def a(i: int):
    return WordLib.gen("a", i)


class TestIterAssignments:
    def test_lexicographic(self):
        param_range = ParamRange((ParamBound("k", 1), ParamBound("l", 1)))
        assert list(iter_assignments(param_range, 2)) == [
            {"k": 1, "l": 1}, {"k": 1, "l": 2}, {"k": 2, "l": 1}, {"k": 2, "l": 2},
        ]

    def test_declared_upper_bound_is_kept(self):
        param_range = ParamRange((ParamBound("s", 1, 2),))
        assert [env["s"] for env in iter_assignments(param_range, 5)] == [1, 2]
        assert [env["s"] for env in iter_assignments(param_range)] == [1, 2]

    def test_per_parameter_bound(self):
        param_range = ParamRange((ParamBound("k", 1), ParamBound("l", 1)))
        assert len(list(iter_assignments(param_range, {"k": 1, "l": 3}))) == 3

    def test_unbounded_without_bound(self):
        with pytest.raises(err.UnboundedSchemaError, match=err.SCHEMA_UNBOUNDED_NO_BOUND):
            list(iter_assignments(ParamRange((ParamBound("s", 1),))))

    def test_bound_below_lower(self, caplog):
        with caplog.at_level(logging.WARNING):
            assert list(iter_assignments(ParamRange((ParamBound("s", 2),)), 1)) == []
        assert "below the lower bound" in caplog.text


class TestInstantiate:
    def test_rationals(self):
        p = instantiate(Examples.example("Q"), 4)
        assert p.is_instantiated()
        assert p.relators == (
            WordLib.mul(WordLib.pow(a(2), 2), WordLib.inv(a(1))),
            WordLib.mul(WordLib.pow(a(3), 3), WordLib.inv(a(2))),
            WordLib.mul(WordLib.pow(a(4), 4), WordLib.inv(a(3))),
        )

    def test_prufer(self):
        p = instantiate(Examples.example("prufer"), 3)
        assert p.relators[0] == WordLib.pow(a(1), 2)
        assert p.relators[1:] == tuple(
            WordLib.mul(WordLib.pow(a(s), 2), WordLib.inv(a(s - 1))) for s in range(2, 4)
        )

    def test_trivial_instances_are_dropped(self):
        p = instantiate(Examples.example("zinf"), 3)
        assert len(p.relators) == 6
        assert p.dropped == 3
        assert WordLib.comm(a(1), a(2)) in p.relators

    def test_keeps_declarations(self):
        source = Examples.example("zinf")
        p = instantiate(source, 2)
        assert p.families == source.families
        assert p.torsion_free_asserted

    def test_concrete_presentation_unchanged(self):
        p = parse("gens x; rels x^3;")
        assert instantiate(p) == p

    def test_unbounded(self):
        with pytest.raises(err.UnboundedSchemaError):
            instantiate(Examples.example("Q"))

    def test_bound_caps_values(self):
        p = parse("gens a[i] for i >= 1; rels a[s+1]^2 = a[s] for s >= 1;")
        assert len(instantiate(p, 3).relators) == 3
        assert Generator("a", 4) in instantiate(p, 3).relators[-1].generators()

    @pytest.mark.parametrize("name", ["zinf", "Q", "prufer"])
    def test_monotone_in_bound(self, name):
        source = Examples.example(name)
        for bound in range(1, 5):
            assert set(instantiate(source, bound).relators) <= set(instantiate(source, bound + 1).relators)

    def test_monotone_on_random_presentations(self):
        rng = random.Random(5)
        for _ in range(100):
            source = random_presentation(rng)
            for bound in range(1, 4):
                assert set(instantiate(source, bound).relators) <= set(instantiate(source, bound + 1).relators)
