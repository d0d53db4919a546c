import random
from collections import Counter
from itertools import combinations
from math import comb, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import GOLDEN_JSON, GOLDEN_BASES
from oracles import brute_bases, draconian_bruteforce
from thedron.matching import hall_condition_bruteforce
from thedron.matroid import (
    Presentation,
    PresentationError,
    TypeTable,
    build_type_table,
    canonical_form,
    cm,
    enumerate_bases,
    enumerate_maximal_valid,
    expand,
    is_base_sequence,
    is_basis,
    is_maximal,
    is_valid,
    parse_presentation,
    restrict,
    restrict_sequence,
    trim,
    type_sequence,
)
from thedron.verify import random_presentation


class TestParse:
    def test_golden_json(self):
        P = parse_presentation(GOLDEN_JSON)
        assert (P.n, P.r) == (9, 2)
        assert P.members == (frozenset({1, 2, 6, 7, 8, 9}), frozenset({3, 4, 5, 6, 7, 8, 9}))

    def test_bytes_and_plain_text_agree(self):
        text = "9 2\n1 2 6 7 8 9\n3 4 5 6 7 8 9\n"
        assert parse_presentation(text.encode()) == parse_presentation(GOLDEN_JSON)

    def test_free_matroid_on_one_element(self):
        P = parse_presentation('{"n": 1, "r": 1, "members": [[1]]}')
        assert enumerate_bases(P) == [(1,)]

    @pytest.mark.parametrize("text, match", [
        ('{"n": 3, "r": 2, "members": [[1], [1]]}', "transversal"),
        ('{"n": 2, "r": 2, "members": [[1], []]}', "empty"),
        ('{"n": 3, "r": 1, "members": [[1, 2]]}', "element 3 is a loop"),
        ('{"n": 2, "r": 1, "members": [[1, 5]]}', "outside"),
        ('{"n": 2, "r": 2, "members": [[1, 2]]}', "expected 2 members"),
        ('{"n": 2, "members": [[1]]}', "keys"),
        ('{"n": "2", "r": 1, "members": [[1, 2]]}', "integer"),
        ("{not json", "invalid JSON"),
        ("2 x\n1 2\n", "plain-text"),
        ("2\n1 2\n", "n r"),
        ("   ", "empty input"),
    ])
    def test_errors(self, text, match):
        with pytest.raises(PresentationError, match=match):
            parse_presentation(text)


class TestBases:
    def test_golden_examples(self, golden):
        Q, _ = golden
        assert is_basis(Q, {1, 3})
        assert not is_basis(Q, {1, 2})
        assert not is_basis(Q, set())
        assert not is_basis(Q, {1, 3, 4})

    def test_golden_enumeration_is_table(self, golden):
        Q, _ = golden
        bases = enumerate_bases(Q)
        assert len(bases) == 32 == 2 * 3 + 2 * 4 + 3 * 4 + comb(4, 2)
        assert bases == sorted(GOLDEN_BASES)

    def test_free_and_uniform(self, free2, u24):
        assert enumerate_bases(free2[0]) == [(1, 2)]
        assert enumerate_bases(u24[0]) == list(combinations(range(1, 5), 2))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**32))
    def test_bases_agree_with_bruteforce(self, seed):
        P = random_presentation(random.Random(seed), max_n=7, max_r=3)
        assert enumerate_bases(P) == brute_bases(P)


class TestTypeTable:
    def test_golden(self, golden):
        _, T = golden
        assert T.types == (frozenset({1}), frozenset({2}), frozenset({1, 2}))
        assert T.multiplicities == (2, 3, 4)
        assert T.classes == ((1, 2), (3, 4, 5), (6, 7, 8, 9))
        assert T.rank == 2 and T.m == 3 and T.n == 9

    def test_single_member(self):
        T = build_type_table(Presentation.from_lists(2, [[1, 2]]))
        assert T.types == (frozenset({1}),)
        assert T.multiplicities == (2,)

    def test_relabel_by_type_order(self):
        # element 1 only in member 2, element 2 only in member 1
        T = build_type_table(Presentation.from_lists(2, [[2], [1]]))
        assert T.types == (frozenset({1}), frozenset({2}))
        assert T.relabel == {2: 1, 1: 2}
        assert T.classes == ((1,), (2,))

    def test_within_class_order_is_preserved(self):
        P = Presentation.from_lists(4, [[1, 2, 3, 4], [4, 2]])
        T = build_type_table(P)
        assert T.types == (frozenset({1}), frozenset({1, 2}))
        assert [T.relabel[e] for e in (1, 3, 2, 4)] == [1, 2, 3, 4]

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 2**32))
    def test_invariants(self, seed):
        P = random_presentation(random.Random(seed))
        T = build_type_table(P)
        assert sum(T.multiplicities) == P.n
        labels = [e for c in T.classes for e in c]
        assert labels == list(range(1, P.n + 1))
        keys = [(len(I), sorted(I)) for I in T.types]
        assert keys == sorted(keys) and len(set(T.types)) == T.m
        for I, cls in zip(T.types, T.classes):
            old = [e for e, new in T.relabel.items() if new in cls]
            assert all(P.element_types[e] == I for e in old)
            assert [T.relabel[e] for e in sorted(old)] == list(cls)

    def test_canonical_form_relabels_members(self):
        Q, T = canonical_form(Presentation.from_lists(2, [[2], [1]]))
        assert Q.members == (frozenset({1}), frozenset({2}))
        assert T.relabel == {1: 1, 2: 2}


class TestSequences:
    def test_type_sequence(self, golden):
        _, T = golden
        assert type_sequence(T, {4, 8}) == (0, 1, 1)
        assert type_sequence(T, set()) == (0, 0, 0)
        assert type_sequence(T, {1, 3}) == (1, 1, 0)

    @pytest.mark.parametrize("a, valid", [((0, 1, 1), True), ((2, 0, 0), False), ((0, 0, 0), True),
                                          ((0, 0, 3), False), ((1, 1, 1), False)])
    def test_is_valid(self, golden, a, valid):
        _, T = golden
        assert is_valid(T, a) is valid
        assert hall_condition_bruteforce(expand(T, a)) is valid

    def test_is_maximal(self, golden):
        _, T = golden
        assert is_maximal(T, (0, 1, 1))
        assert not is_maximal(T, (0, 0, 0))
        assert not is_maximal(T, (1, 1, 1))

    def test_is_base_sequence(self, golden):
        _, T = golden
        assert is_base_sequence(T, (0, 0, 2))
        assert is_base_sequence(T, (0, 1, 1))
        shrunk = TypeTable(T.members, T.types, T.classes[:2] + ((6,),))
        assert not is_base_sequence(shrunk, (0, 0, 2))

    def test_enumerate_maximal_valid(self, golden, free2, u24):
        assert enumerate_maximal_valid(golden[1]) == [(0, 0, 2), (0, 1, 1), (1, 0, 1), (1, 1, 0)]
        assert enumerate_maximal_valid(free2[1]) == [(1, 1)]
        assert enumerate_maximal_valid(u24[1]) == [(2,)]

    def test_restrict(self, golden):
        _, T = golden
        R = restrict(T, {2})
        assert R.types == (frozenset({2}),) and R.multiplicities == (3,) and R.rank == 1
        assert restrict(T, {1, 2}) == T
        E = restrict(T, set())
        assert E.m == 0 and E.rank == 0
        assert restrict_sequence(T, {2}, (0, 1, 1)) == (1,)
        with pytest.raises(ValueError):
            restrict(T, {3})

    @pytest.mark.parametrize("a, out, q", [((0, 1, 1), (0, 1, 0), 3), ((1, 0, 0), (0, 0, 0), 1),
                                           ((0, 0, 2), (0, 0, 0), 3)])
    def test_trim(self, a, out, q):
        assert trim(a) == (out, q)

    def test_trim_zero(self):
        with pytest.raises(ValueError):
            trim((0, 0))

    def test_cm(self, golden):
        _, T = golden
        assert cm(T, (0, 1, 0)) == {2}
        assert cm(T, (0, 0, 0)) == frozenset()
        assert cm(T, (1, 1, 0)) == {1, 2}
        with pytest.raises(ValueError):
            cm(T, (2, 0, 0))


def _sub_multisets(a):
    from itertools import product
    return [b for b in product(*(range(x + 1) for x in a)) if any(b)]


class TestInvariants:
    def test_validity_agrees_with_exhaustive_hall(self, small_random_instances):
        for P in small_random_instances:
            _, T = canonical_form(P)
            if T.m > 6:
                continue
            from itertools import product
            for a in product(range(3), repeat=T.m):
                if sum(a) > 6:
                    continue
                assert is_valid(T, a) == hall_condition_bruteforce(expand(T, a))

    def test_base_counts_per_type(self, random_instances):
        for P in random_instances[:60]:
            Q, T = canonical_form(P)
            counts = {}
            for B in enumerate_bases(Q):
                a = type_sequence(T, B)
                assert is_base_sequence(T, a)
                counts[a] = counts.get(a, 0) + 1
            for a in enumerate_maximal_valid(T):
                expected = prod(comb(l, x) for l, x in zip(T.multiplicities, a))
                assert counts.get(a, 0) == expected

    def test_coloop_count(self, random_instances):
        from itertools import product
        for P in random_instances[:60]:
            _, T = canonical_form(P)
            for a in product(*(range(min(2, T.rank) + 1) for _ in range(T.m))):
                if sum(a) > T.rank or not is_valid(T, a):
                    continue
                L = cm(T, a)
                inside = sum(x for I, x in zip(T.types, a) if I <= L)
                assert inside == len(L)

    def test_maximal_valid_are_draconian(self, random_instances):
        for P in random_instances:
            _, T = canonical_form(P)
            if T.m > 6:
                continue
            from itertools import product
            found = [a for a in product(range(T.rank + 1), repeat=T.m)
                     if draconian_bruteforce(T.types, a, T.rank)]
            assert enumerate_maximal_valid(T) == sorted(found)

    @pytest.mark.parametrize("seed", range(10))
    def test_member_permutation_invariance(self, seed):
        rng = random.Random(seed)
        P = random_presentation(rng)
        sigma = list(range(P.r))
        rng.shuffle(sigma)
        Pp = Presentation(P.n, P.r, tuple(P.members[i] for i in sigma))
        # member j of Pp is member sigma[j-1]+1 of P
        rename = {j + 1: sigma[j] + 1 for j in range(P.r)}
        assert enumerate_bases(P) == enumerate_bases(Pp)
        T, Tp = build_type_table(P), build_type_table(Pp)
        catalogue = {I: c for I, c in zip(T.types, T.multiplicities)}
        mapped = {frozenset(rename[j] for j in I): c for I, c in zip(Tp.types, Tp.multiplicities)}
        assert catalogue == mapped

        def per_type(Q, name):
            def key(B):
                return tuple(sorted(tuple(sorted(name(Q.element_types[e]))) for e in B))
            return Counter(key(B) for B in enumerate_bases(Q))

        assert per_type(P, lambda I: I) == per_type(Pp, lambda I: {rename[j] for j in I})
