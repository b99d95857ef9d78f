import random

import pytest

from phonosearch.query import MatchWeights, Query, score_fields, token_match_level
from conftest import FULL_ROW, PARTIAL_ROWS, random_query, random_row
import oracles


class TestQueryParse:
    def test_tokens_derived_from_text(self):
        q = Query.parse("Rahim Dinajpur")
        assert q.tokens == ("RAHIM", "DINAJPUR")

    def test_default_limit(self):
        assert Query.parse("x").limit == 50

    def test_digits_only_has_no_tokens(self):
        assert Query.parse("8801700041114").tokens == ()


class TestTokenMatchLevel:
    def test_exact(self):
        assert token_match_level("KHULNA", "KHULNA") == 1.0

    def test_primary(self):
        # KHULN and KHULNA share their primary code
        assert token_match_level("KHULN", "KHULNA") == 0.9

    def test_cross(self):
        # SMITH primary SM0/secondary XMT; SCHMIDT primary XMT
        assert token_match_level("SMITH", "SCHMIDT") == 0.75

    def test_no_match(self):
        assert token_match_level("RAHIM", "BARISAL") == 0.0


class TestScore:
    def test_all_exact_scores_100(self):
        assert score_fields(("ABDULLAH", "KHULNA"), FULL_ROW) == 100

    def test_no_match_scores_0(self):
        assert score_fields(("ZZZZZ",), FULL_ROW) == 0

    def test_misspelled_query_scores_95(self):
        # hand evaluation: ABDULLAH exact 1.00, KHULN primary-matches
        # KHULNA 0.90, mean 0.95
        q = Query.parse("Abdullah khuln")
        assert score_fields(q.tokens, FULL_ROW) == 95

    def test_partial_row_scores_45(self):
        # ABDULLAH matches nothing (0), KHULN matches village KHALNA at
        # 0.90, mean 0.45
        q = Query.parse("Abdullah khuln")
        assert score_fields(q.tokens, PARTIAL_ROWS[0]) == 45

    def test_weights_configurable(self):
        weights = MatchWeights(exact=1.0, primary=0.5, cross=0.25, secondary=0.1)
        q = Query.parse("khuln")
        assert score_fields(q.tokens, ("Khulna",), weights) == 50


class TestSearch:
    def test_misspelling_scenario_ranking(self, demo_engine):
        result = demo_engine.search("Abdullah khuln")
        assert not result.no_searchable_terms
        scores = [h.score_percent for h in result.hits]
        pointers = [h.pointer.p_value for h in result.hits]
        assert len(result.hits) == 9
        assert scores[:7] == [95] * 7
        assert pointers[:7] == [1, 2, 3, 4, 5, 6, 7]
        assert scores[7] == scores[8] < 95
        assert pointers[7:] == [8, 9]

    def test_no_match_returns_empty(self, demo_engine):
        assert demo_engine.search("zzzzqqq").hits == ()

    def test_digits_only_flagged(self, demo_engine):
        result = demo_engine.search("8801700041114")
        assert result.no_searchable_terms
        assert result.hits == ()

    def test_limit_truncates(self, demo_engine):
        assert len(demo_engine.search("Abdullah khuln", limit=3).hits) == 3

    def test_min_score_filters(self, demo_engine):
        result = demo_engine.search("Abdullah khuln", min_score=50)
        assert [h.pointer.p_value for h in result.hits] == [1, 2, 3, 4, 5, 6, 7]

    def test_hits_carry_snapshots(self, demo_engine):
        hit = demo_engine.search("Abdullah").hits[0]
        assert hit.matched_record.fields == FULL_ROW

    def test_domain_reduction_counter(self, demo_engine):
        result = demo_engine.search("Abdullah khuln")
        candidates = demo_engine.candidates("Abdullah khuln")
        assert result.scored_count == len(candidates)
        assert result.scored_count < demo_engine.store.count() + 1

    def test_update_drops_stale_match(self, demo_engine):
        pointer = demo_engine.search("Abdullah khuln").hits[0].pointer
        row = list(FULL_ROW)
        row[1] = "Dhaka"
        demo_engine.update(pointer, row)
        still = [h.pointer for h in demo_engine.search("khuln").hits]
        assert pointer not in still

    def test_delete_drops_record(self, demo_engine):
        pointer = demo_engine.search("Ibtihal").hits[0].pointer
        demo_engine.delete(pointer)
        assert pointer not in {h.pointer for h in demo_engine.search("Ibtihal").hits}

    def test_monotonicity_nonmatching_insert(self, demo_engine):
        before = [(h.pointer, h.score_percent) for h in demo_engine.search("Abdullah khuln").hits]
        demo_engine.insert(0, ("Zorro", "Zanzibar", "Zigzag", "Zulu",
                               "Zephyr", "Zodiac", "Zoologist", "8801000000000"))
        after = [(h.pointer, h.score_percent) for h in demo_engine.search("Abdullah khuln").hits]
        assert before == after

    def test_determinism(self, demo_engine):
        a = demo_engine.search("Abdullah khuln")
        b = demo_engine.search("Abdullah khuln")
        assert [(h.pointer, h.score_percent) for h in a.hits] == \
               [(h.pointer, h.score_percent) for h in b.hits]


class TestMisspellingTolerance:
    @pytest.mark.parametrize("seed", range(8))
    def test_same_primary_code_always_retrieves(self, seed, engine):
        # any misspelling that lands on the same primary code must pull
        # every record containing the original token, scored >= 90
        rng = random.Random(seed)
        rows = [random_row(rng) for _ in range(40)]
        for row in rows:
            engine.insert(0, row)
        from phonosearch.phonetics import encode, tokenize

        token = rng.choice([w for w in tokenize(" ".join(rows[0])) if len(w) >= 4])
        containing = {r.pointer for r in engine.store.iter_records()
                      if token in tokenize(" ".join(r.fields))}
        for _ in range(50):  # hunt for a code-preserving typo
            i = rng.randrange(1, len(token) - 1)
            typo = token[:i] + token[i + 1:]
            if typo != token and encode(typo).primary == encode(token).primary:
                hits = engine.search(typo, limit=100).hits
                strong = {h.pointer for h in hits if h.score_percent >= 90}
                assert containing <= strong
                break


class TestCandidates:
    def test_worked_example_candidate_present(self, engine):
        pointer = engine.insert(0, ("Rahim", "Rangpur", "Dinajpur", "Birganj",
                                    "Mohanpur", "Rampur", "Farmer", "8801"))
        assert pointer in engine.candidates("Rahim Dinajpur")

    def test_digits_only_empty(self, engine):
        assert engine.candidates("8801700041114") == frozenset()

    def test_matches_exhaustive_scan(self, engine):
        rng = random.Random(11)
        for p in range(1, 301):
            engine.insert(0, random_row(rng))
        records = list(engine.store.iter_records())
        for _ in range(25):
            q = random_query(rng)
            assert engine.candidates(q) == oracles.candidate_pointers(q, records)


class TestOracleEquivalence:
    def test_search_equals_bruteforce(self, engine):
        rng = random.Random(2024)
        for _ in range(400):
            engine.insert(0, random_row(rng))
        records = list(engine.store.iter_records())
        for _ in range(40):
            q = random_query(rng)
            limit = rng.choice((5, 20, 50))
            expected = oracles.search(q, records, limit=limit)
            got = [(h.pointer, h.score_percent) for h in engine.search(q, limit=limit).hits]
            assert got == expected, q

    def test_long_queries_take_float_path(self, engine):
        rng = random.Random(31)
        for _ in range(150):
            engine.insert(0, random_row(rng))
        records = list(engine.store.iter_records())
        q = " ".join(random_query(rng) for _ in range(4))  # > 6 tokens
        assert len(Query.parse(q).tokens) > 6
        expected = oracles.search(q, records)
        got = [(h.pointer, h.score_percent) for h in engine.search(q).hits]
        assert got == expected

    @pytest.mark.parametrize("seed", range(15))
    def test_scalar_score_matches_search_scores(self, seed, tmp_path):
        from phonosearch.engine import RecordSearchEngine

        rng = random.Random(seed)
        eng = RecordSearchEngine(tmp_path, fsync=False)
        try:
            for _ in range(rng.randint(1, 60)):
                eng.insert(0, random_row(rng))
            q = random_query(rng)
            query = Query.parse(q)
            for hit in eng.search(q).hits:
                assert hit.score_percent == eng.searcher.score(query, hit.matched_record)
        finally:
            eng.close()
