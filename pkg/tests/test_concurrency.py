"""Tests for the shared memo tables under concurrent access."""

import threading
from concurrent.futures import ThreadPoolExecutor

from qtoric.algebra.compositions import Composition, compositions_of
from qtoric.services.cache import graded_piece_cache
from qtoric.services.face_ring_service import graded_piece
from qtoric.services.hopf_service import CoproductTable, coproduct_table
from qtoric.services.quasitoric_service import char_function, char_number, product

WORKERS = 8


def _run_together(task, count: int = WORKERS) -> list:
    barrier = threading.Barrier(count)

    def start(_):
        barrier.wait()
        return task()

    with ThreadPoolExecutor(max_workers=count) as pool:
        return list(pool.map(start, range(count)))


class TestCoproductTableConcurrency:
    """Test cases for concurrent coproduct and antipode lookups."""

    def test_words_are_stored_once(self):
        """Test every thread receives the same coproduct object for a word."""
        table = CoproductTable.build(6)
        alpha = Composition((2, 1, 3))
        results = _run_together(lambda: table.word(alpha))
        assert all(result is results[0] for result in results)
        assert table.word(alpha) is results[0]

    def test_antipodes_are_stored_once(self):
        """Test every thread receives the same antipode object for a word."""
        table = CoproductTable.build(6)
        alpha = Composition((1, 2, 2))
        results = _run_together(lambda: table.word_antipode(alpha))
        assert all(result is results[0] for result in results)
        assert results[0] == CoproductTable.build(6).word_antipode(alpha)

    def test_mixed_words_agree_with_sequential_table(self):
        """Test concurrent fills of many words match a table filled in order."""
        shared = CoproductTable.build(5)
        words = list(compositions_of(5))

        def fill():
            return [shared.word_antipode(alpha) for alpha in reversed(words)]

        _run_together(fill)
        sequential = CoproductTable.build(5)
        for alpha in words:
            assert shared.word(alpha) == sequential.word(alpha)
            assert shared.word_antipode(alpha) == sequential.word_antipode(alpha)

    def test_shared_table_is_unique(self):
        """Test concurrent requests for the shared table return one object."""
        results = _run_together(lambda: coproduct_table(6))
        assert all(result is results[0] for result in results)


class TestGradedPieceConcurrency:
    """Test cases for concurrent graded-piece lookups."""

    def test_graded_piece_is_stored_once(self, cp1xcp1):
        """Test every thread receives the identical cached graded piece."""
        results = _run_together(lambda: graded_piece(cp1xcp1, 2))
        assert all(result is results[0] for result in results)
        assert graded_piece(cp1xcp1, 2) is results[0]

    def test_char_numbers_independent_of_evaluation_order(self, cp1, cp2):
        """Test characteristic numbers agree whatever order threads evaluate them in."""
        d = product(cp1, cp2)
        expected = char_function(d).values
        compositions = list(compositions_of(d.m))
        graded_piece_cache.clear()

        def evaluate(order):
            return {str(alpha): char_number(d, alpha) for alpha in order}

        orders = [compositions, list(reversed(compositions))] * (WORKERS // 2)
        with ThreadPoolExecutor(max_workers=WORKERS) as pool:
            for values in pool.map(evaluate, orders):
                assert values == expected
