"""Exhaustive representation search: exact small censuses and guards."""

import pytest

from morpheq.catalog import builtin_prefix, even_fib_rep, fib_rep
from morpheq.repsearch import (
    FoundRep,
    SearchSpec,
    SearchTooLargeError,
    canonical_form,
    complexity,
    search,
)
from morpheq.words import Coding, Morphism, MorphicRep


def images_of(rep: FoundRep) -> tuple[str, ...]:
    return tuple("".join(map(str, im)) for im in rep.morphism.images)


class TestSearch:
    def test_constant_zero_target(self):
        res = search(
            SearchSpec(target=(0,) * 10, alphabet_size=1, max_image_len=3, prefix_len=10)
        )
        assert [(images_of(r), r.coding.table, r.complexity) for r in res] == [
            (("00",), (0,), 2),
            (("000",), (0,), 3),
        ]

    def test_fib_binary_short_images(self):
        fib30 = fib_rep().prefix(30)
        res = search(
            SearchSpec(target=fib30, alphabet_size=2, max_image_len=2, prefix_len=30)
        )
        assert len(res) == 1
        assert images_of(res[0]) == ("01", "0")
        assert res[0].coding.table == (0, 1)
        assert res[0].complexity == 3

    def test_fib_binary_finds_the_square_too(self):
        fib30 = fib_rep().prefix(30)
        res = search(
            SearchSpec(target=fib30, alphabet_size=2, max_image_len=3, prefix_len=30)
        )
        assert [images_of(r) for r in res] == [("01", "0"), ("010", "01")]
        square = Morphism.from_strings("01", "0") ** 2
        assert res[1].morphism == square

    def test_even_fib_has_no_four_letter_rep(self):
        target = builtin_prefix("even-fib", 35)
        res = search(
            SearchSpec(target=target, alphabet_size=4, max_image_len=3, prefix_len=35)
        )
        assert res == []

    def test_results_are_sound_and_sorted(self):
        target = fib_rep().prefix(40)
        res = search(
            SearchSpec(target=target, alphabet_size=3, max_image_len=3, prefix_len=40)
        )
        assert res
        for rep in res:
            assert rep.morphism.images[0][0] == 0
            assert len(rep.morphism.images[0]) >= 2
            assert rep.complexity == complexity(rep.morphism)
            regenerated = MorphicRep(rep.morphism, rep.coding).prefix(40)
            assert regenerated == tuple(target)
        keys = [(r.complexity, r.morphism.images, r.coding.table) for r in res]
        assert keys == sorted(keys)

    def test_parallel_jobs_agree(self):
        target = fib_rep().prefix(25)
        spec1 = SearchSpec(target=target, alphabet_size=2, max_image_len=3, prefix_len=25)
        spec2 = SearchSpec(
            target=target, alphabet_size=2, max_image_len=3, prefix_len=25, jobs=2
        )
        assert search(spec1) == search(spec2)


class TestGuards:
    def test_alphabet_guard(self):
        with pytest.raises(SearchTooLargeError, match="alphabet size 7"):
            SearchSpec(target=(0,) * 5, alphabet_size=7, max_image_len=2, prefix_len=5)

    def test_image_length_guard(self):
        with pytest.raises(SearchTooLargeError, match="image length 4"):
            SearchSpec(target=(0,) * 5, alphabet_size=2, max_image_len=4, prefix_len=5)

    def test_rejects_nonpositive_sizes(self):
        with pytest.raises(ValueError):
            SearchSpec(target=(0,) * 5, alphabet_size=0, max_image_len=2, prefix_len=5)
        with pytest.raises(ValueError):
            SearchSpec(target=(0,) * 5, alphabet_size=2, max_image_len=0, prefix_len=5)
        with pytest.raises(ValueError):
            SearchSpec(target=(0,) * 5, alphabet_size=2, max_image_len=2, prefix_len=0)
        with pytest.raises(ValueError):
            SearchSpec(
                target=(0,) * 5, alphabet_size=2, max_image_len=2, prefix_len=5, jobs=0
            )

    def test_prefix_longer_than_target(self):
        with pytest.raises(ValueError, match="shorter than"):
            SearchSpec(target=(0, 1, 0), alphabet_size=2, max_image_len=2, prefix_len=9)


class TestCanonicalForm:
    def test_fixes_a_permuted_catalog_rep(self):
        base = even_fib_rep()
        # swap symbols 3 and 4
        pi = (0, 1, 2, 4, 3)
        images = [None] * 5
        for a in range(5):
            images[pi[a]] = tuple(pi[s] for s in base.morphism.images[a])
        table = [0] * 5
        for a in range(5):
            table[pi[a]] = base.coding.table[a]
        scrambled_f = Morphism(tuple(images))
        scrambled_tau = Coding(tuple(table), 2)
        assert scrambled_f != base.morphism

        f, tau = canonical_form(scrambled_f, scrambled_tau)
        assert f == base.morphism
        assert tau == base.coding

    def test_canonical_rep_is_a_fixed_point_of_renaming(self):
        base = even_fib_rep()
        f, tau = canonical_form(base.morphism, base.coding)
        assert (f, tau) == (base.morphism, base.coding)

    def test_rejects_unreachable_symbol(self):
        f = Morphism.from_strings("01", "0", "2")
        with pytest.raises(ValueError, match="not all symbols occur"):
            canonical_form(f, Coding.identity(3))
