import random

import pytest

from phonosearch.engine import RecordSearchEngine
from phonosearch import wordlists

# Demo rows: seven identical full matches and two partial ones sharing the
# query-collidable village token "Khalna" (same primary code as
# "Khulna"/"khuln").
FULL_ROW = ("Abdullah", "Khulna", "Chandpur", "Haimchar", "Naikhong",
            "Gorea", "Employee", "8801700041114")
PARTIAL_ROWS = (
    ("Ibtihal", "Barisal", "Barisal", "Bakerganj", "Kabai",
     "Khalna", "Businessman", "8801700003148"),
    ("Ibtihal", "Barisal", "Patuakhali", "Kalapara", "Chakamaiya",
     "Khalna", "Teacher", "8801700012390"),
)


@pytest.fixture
def engine(tmp_path):
    data_dir = tmp_path / "data"
    data_dir.mkdir()
    eng = RecordSearchEngine(data_dir, fsync=False)
    yield eng
    eng.close()


@pytest.fixture
def demo_engine(engine):
    for _ in range(7):
        engine.insert(0, FULL_ROW)
    for row in PARTIAL_ROWS:
        engine.insert(0, row)
    return engine


def random_row(rng: random.Random) -> list[str]:
    pools = (wordlists.GIVEN_NAMES, wordlists.SURNAMES, wordlists.DISTRICTS,
             wordlists.UPAZILAS, wordlists.VILLAGES, wordlists.OCCUPATIONS)
    return [
        f"{rng.choice(wordlists.GIVEN_NAMES)} {rng.choice(wordlists.SURNAMES)}",
        rng.choice(wordlists.DIVISIONS),
        rng.choice(wordlists.DISTRICTS),
        rng.choice(wordlists.UPAZILAS),
        rng.choice(wordlists.VILLAGES),
        rng.choice(rng.choice(pools)),
        rng.choice(wordlists.OCCUPATIONS),
        "8801" + str(rng.randrange(10 ** 9)).zfill(9),
    ]


def random_query(rng: random.Random) -> str:
    words = []
    for _ in range(rng.randint(1, 3)):
        pool = rng.choice((wordlists.GIVEN_NAMES, wordlists.DISTRICTS,
                           wordlists.VILLAGES, wordlists.SURNAMES))
        word = rng.choice(pool)
        if rng.random() < 0.35 and len(word) >= 4:  # inject a typo
            i = rng.randrange(1, len(word) - 1)
            word = word[:i] + word[i + 1:] if rng.random() < 0.5 \
                else word[:i] + word[i + 1] + word[i] + word[i + 2:]
        words.append(word)
    return " ".join(words)
