import logging
from typing import Callable, NamedTuple

from .. import constants as const
from ..embedder import UniversalWords as uw
from ..library import WordLib
from ..library.Events import emit
from ..types import Generator, Substitution, UnmappedPolicy, Word
from . import SubgroupGraph
from .Report import ClaimRecord


logger = logging.getLogger(__name__)


# Events
class IdentityChecked(NamedTuple):
    name: str
    i: int
    passed: bool


def _a_letters() -> Word:
    # x^-1 y x written out, independent of conj
    x, y = Generator(const.X_NAME), Generator(const.Y_NAME)
    return WordLib.from_syllables([(x, -1), (y, 1), (x, 1)])


def _passage_yz_in_xy(i: int) -> Word:
    z_image = Substitution({Generator(const.Z_NAME): uw.z_word()}, UnmappedPolicy.IDENTITY_ON_UNMAPPED)
    return WordLib.substitute(uw.passage_word_yz(i), z_image)


# name -> i -> (lhs, rhs)
IDENTITIES: dict[str, Callable[[int], tuple[Word, Word]]] = {
    "a_conjugated_by_passage": lambda i: (
        WordLib.conj(uw.a_word(), uw.passage_word(i)),
        WordLib.mul(uw.universal_word(i), uw.a_word()),
    ),
    "passage_over_yz": lambda i: (_passage_yz_in_xy(i), uw.passage_word(i)),
    "y_conjugated_by_x": lambda i: (WordLib.conj(uw.Y, uw.X), _a_letters()),
    "z_conjugated_by_x": lambda i: (WordLib.conj(uw.z_word(), uw.X), uw.Y),
}


def check_identity(name: str, i: int, perturb: bool = False) -> ClaimRecord:
    """Reduce lhs * rhs^-1 and pass when it is the empty word.

    With `perturb` the last letter of the right-hand side is dropped, so the identity must fail.
    """
    lhs, rhs = IDENTITIES[name](i)
    if perturb:
        rhs = WordLib.drop_last_letter(rhs)
    residual = WordLib.mul(lhs, WordLib.inv(rhs))
    passed = not residual
    emit(logger, IdentityChecked(name, i, passed))
    return ClaimRecord(name, {"i": i, "perturbed": perturb}, passed, str(residual))


def check_identities(i_max: int, perturb: bool = False) -> list[ClaimRecord]:
    """Every identity for i = 1..i_max, identity by identity."""
    return [check_identity(name, i, perturb) for name in IDENTITIES for i in range(1, i_max + 1)]


def check_expansions(i_max: int) -> list[ClaimRecord]:
    """Agreement of the conjugate constructions with the letter formulas, and the length laws, for i = 1..i_max."""
    records = []
    for i in range(1, i_max + 1):
        general = uw.universal_word(i)
        tf = uw.universal_word_tf(i)
        records.append(ClaimRecord(
            "expansion_general", {"i": i},
            general == uw.universal_word_expanded(i) and len(general) == 4 * i + 10, str(len(general)),
        ))
        records.append(ClaimRecord(
            "expansion_tf", {"i": i},
            tf == uw.universal_word_tf_expanded(i) and len(tf) == 4 * i + 7, str(len(tf)),
        ))
        records.append(ClaimRecord(
            "suffix_relation", {"i": i},
            uw.universal_word_expanded(i) == WordLib.mul(uw.universal_word_tf_expanded(i), WordLib.inv(_a_letters())),
        ))
        passage = uw.passage_word(i)
        records.append(ClaimRecord("length_passage", {"i": i}, len(passage) == 2 * i + 2, str(len(passage))))
        hnn = uw.hnn_word(i)
        records.append(ClaimRecord("length_hnn", {"i": i}, len(hnn) == 4 * i + 12, str(len(hnn))))
    return records


def check_length_comparison(i_max: int) -> list[ClaimRecord]:
    """The HNN-based words are exactly two letters longer than the general universal words."""
    records = []
    for i in range(1, i_max + 1):
        difference = len(uw.hnn_word(i)) - len(uw.universal_word(i))
        records.append(ClaimRecord("hnn_minus_universal", {"i": i}, difference == 2, str(difference)))
    return records


def check_basis(n: int) -> list[ClaimRecord]:
    """a_1..a_m freely generate a subgroup of rank m, for m = 1..n."""
    records = []
    for m in range(1, n + 1):
        words = [uw.universal_word(i) for i in range(1, m + 1)]
        found = SubgroupGraph.rank(SubgroupGraph.fold(SubgroupGraph.build_graph(words)))
        records.append(ClaimRecord("universal_words_free_basis", {"n": m}, found == m, f"rank={found}"))
    return records


def _outside(name: str, basis: list[Word], words: dict[int, Word], n: int) -> ClaimRecord:
    graph = SubgroupGraph.fold(SubgroupGraph.build_graph(basis))
    inside = [k for k, w in words.items() if SubgroupGraph.member(graph, w)]
    return ClaimRecord(name, {"n": n}, not inside, f"members={inside}" if inside else "none")


def check_claims(n: int) -> list[ClaimRecord]:
    """Free-generation and non-membership facts the embedding rests on, checked on the first n words.

    Membership answers concern the subgroup generated by the first n words only.
    """
    passages_yz = [uw.passage_word_yz(i) for i in range(1, n + 1)]
    passages = [uw.passage_word(i) for i in range(1, n + 1)]
    tf_words = [uw.universal_word_tf(i) for i in range(1, n + 1)]
    general_words = [uw.universal_word(i) for i in range(1, n + 1)]
    return [
        ClaimRecord("a_and_y_free", {}, SubgroupGraph.is_free_basis([uw.a_word(), uw.Y])),
        ClaimRecord("passages_yz_free", {"n": n}, SubgroupGraph.is_free_basis(passages_yz)),
        _outside("y_powers_outside_passages_yz", passages_yz, {k: WordLib.pow(uw.Y, k) for k in range(1, n + 1)}, n),
        ClaimRecord("passages_free", {"n": n}, SubgroupGraph.is_free_basis(passages)),
        _outside("a_powers_outside_passages", passages, {k: WordLib.pow(uw.a_word(), k) for k in range(1, n + 1)}, n),
        ClaimRecord("tf_words_free", {"n": n}, SubgroupGraph.is_free_basis(tf_words)),
        ClaimRecord("universal_words_free", {"n": n}, SubgroupGraph.is_free_basis(general_words)),
        _outside("x_outside_universal_truncation", general_words, {1: uw.X}, n),
    ]
