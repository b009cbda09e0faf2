import logging
from typing import NamedTuple

from .. import errors as err
from ..presentation.Presentation import Bound, instantiate
from ..presentation.PresentationParser import parse
from ..types import Presentation


"""Target presentations of the built-in examples, written out by hand as families over {x, y}.

They are parsed independently of the embedder and compared with its output by free equality, relator by relator,
after instantiating both sides at the same bound.
"""
ZINF_TARGET = """\
gens x, y;
rels [y^{(x y^k)^2 x^-1}, y^{(x y^l)^2 x^-1}] for k,l >= 1;
"""

Q_TARGET = """\
gens x, y;
rels (y^s)^{(x y^s)^2 x^-1} y^-{(x y^(s-1))^2 x^-1} for s >= 2;
"""

PRUFER_TARGET = """\
let p = 2;
gens x, y;
rels (y^{(x y)^2 x^-1} y^-x)^p;
rels (y^{(x y^s)^2 x^-1} y^-x)^p y^x y^-{(x y^(s-1))^2 x^-1} for s >= 2;
"""

REFERENCE_TARGETS = {"zinf": ZINF_TARGET, "Q": Q_TARGET, "prufer": PRUFER_TARGET}

logger = logging.getLogger(__name__)


# Structs
class Mismatch(NamedTuple):
    position: int
    expected: str
    actual: str


def reference_target(name: str, p: int | None = None) -> Presentation:
    """The hand-written target family of a built-in example.

    Raises:
        PresentationError: If the name is unknown
    """
    if name not in REFERENCE_TARGETS:
        raise err.PresentationError(f"{err.GOLDEN_UNKNOWN_EXAMPLE}: {name}")
    return parse(REFERENCE_TARGETS[name], None if p is None else {"p": p})


def compare_with_reference(name: str, target: Presentation, bound: Bound, p: int | None = None) -> list[Mismatch]:
    """Relators of `target` that differ from the reference family at the same bound; empty when they agree.

    Both sides are instantiated and compared as reduced words, so the comparison is free equality.
    """
    expected = instantiate(reference_target(name, p), bound).relators
    actual = instantiate(target, bound).relators
    mismatches = [
        Mismatch(position, str(e), str(a)) for position, (e, a) in enumerate(zip(expected, actual)) if e != a
    ]
    for position in range(min(len(expected), len(actual)), max(len(expected), len(actual))):
        missing = "<none>"
        mismatches.append(Mismatch(
            position,
            str(expected[position]) if position < len(expected) else missing,
            str(actual[position]) if position < len(actual) else missing,
        ))
    if mismatches:
        logger.warning("%s: %d relators differ from the reference family", name, len(mismatches))
    return mismatches
