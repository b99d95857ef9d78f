"""Double Metaphone encoding and token normalization.

Every word that enters or queries the engine passes through here. The
encoder emits two pronunciation codes per word: a primary for the most
likely pronunciation and a secondary for an alternate one, so that
differently spelled, similar-sounding words land on the same index keys
("Smith" -> SM0/XMT, "Schmidt" -> XMT/SMT, sharing XMT). Soundex, Phonix,
plain Metaphone and stemming were considered and rejected: Soundex buckets
too coarsely on large corpora, and single-code Metaphone cannot bridge
multi-origin spellings the way the dual codes do.

The rules follow Lawrence Philips' Double Metaphone as published in the
June 2000 C/C++ Users Journal and the C source distributed with aspell.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "CodePair",
    "DEFAULT_MAX_CODE_LENGTH",
    "OUTPUT_ALPHABET",
    "SENTINEL_CODE",
    "encode",
    "index_codes",
    "normalize",
    "tokenize",
]

#: Every symbol a code can contain ('0' is the 'th' sound).
OUTPUT_ALPHABET = frozenset("AFHJKLMNPRSTWX0")

#: Classic truncation limit for the emitted codes.
DEFAULT_MAX_CODE_LENGTH = 4

#: Index key for words whose encoding comes out empty (e.g. "H", "HH"),
#: so they stay retrievable by exact match.
SENTINEL_CODE = "_"

_VOWELS = frozenset("AEIOUY")
_SILENT_STARTERS = ("GN", "KN", "PN", "WR", "PS")
_WORD_RE = re.compile(r"[^\W\d_]+")
_AZ_RE = re.compile(r"[A-Z]+\Z")


@dataclass(frozen=True, slots=True)
class CodePair:
    """Primary and secondary phonetic code of one word.

    For unambiguous words the two collapse to the same string.
    """

    primary: str
    secondary: str

    @property
    def ambiguous(self) -> bool:
        return self.primary != self.secondary


def normalize(raw_token: str) -> str | None:
    """Fold a raw token to an uppercase A-Z word, or None.

    Uppercases, folds accented letters to their base letter where Unicode
    decomposition provides one, and drops everything else (digits,
    punctuation, unfoldable symbols). Returns None when nothing remains,
    e.g. for a phone number.
    """
    folded = unicodedata.normalize("NFKD", raw_token.upper())
    word = "".join(c for c in folded if "A" <= c <= "Z")
    return word or None


def tokenize(text: str) -> list[str]:
    """Split text into normalized words, in order, duplicates kept.

    Splits on any run of non-letter characters; pieces that normalize to
    nothing (pure digits, symbols) are dropped.
    """
    out = []
    for piece in _WORD_RE.findall(text):
        word = normalize(piece)
        if word is not None:
            out.append(word)
    return out


def encode(word: str, max_length: int | None = DEFAULT_MAX_CODE_LENGTH) -> CodePair:
    """Encode a normalized word into its phonetic code pair.

    `word` must be non-empty and contain only A-Z (see `normalize`).
    Codes are truncated to `max_length` symbols; pass None for uncapped.
    Deterministic and pure.
    """
    if not _AZ_RE.match(word or ""):
        raise ValueError(f"encode() expects a normalized A-Z word, got {word!r}")
    return _encode_cached(word, max_length)


def index_codes(word: str, max_length: int | None = DEFAULT_MAX_CODE_LENGTH) -> tuple[str, ...]:
    """Index keys for a word: its primary code and, when different, its
    secondary, with empty codes replaced by the sentinel key."""
    pair = encode(word, max_length)
    primary = pair.primary or SENTINEL_CODE
    secondary = pair.secondary or SENTINEL_CODE
    if secondary == primary:
        return (primary,)
    return (primary, secondary)


@lru_cache(maxsize=1 << 16)
def _encode_cached(word: str, max_length: int | None) -> CodePair:
    primary, secondary = _double_metaphone(word)
    if max_length is not None:
        primary = primary[:max_length]
        secondary = secondary[:max_length]
    return CodePair(primary, secondary)


def _double_metaphone(word: str) -> tuple[str, str]:
    """Run the rule set over one uppercase A-Z word; full-length codes."""
    length = len(word)
    last = length - 1
    # Trailing pad so lookaheads (and the few negative raw indexes, which
    # python wraps onto this pad) read harmless spaces, as in the C source.
    s = word + "      "
    slavo_germanic = "W" in word or "K" in word or "CZ" in word  # WITZ implies W
    pri: list[str] = []
    sec: list[str] = []

    def add(p: str, alt: str | None = None) -> None:
        pri.append(p)
        sec.append(p if alt is None else alt)

    def at(start: int, n: int, *options: str) -> bool:
        if start < 0:
            return False
        return s[start:start + n] in options

    pos = 0
    if word[0:2] in _SILENT_STARTERS:
        pos = 1
    if word[0] == "X":
        add("S")  # initial X as in 'Xavier'
        pos = 1

    while pos <= last:
        ch = s[pos]
        match ch:
            case "A" | "E" | "I" | "O" | "U" | "Y":
                if pos == 0:
                    add("A")
                pos += 1

            case "B":
                add("P")
                pos += 2 if s[pos + 1] == "B" else 1

            case "C":
                if (pos > 1 and s[pos - 2] not in _VOWELS and at(pos - 1, 3, "ACH")
                        and (s[pos + 2] != "I"
                             and (s[pos + 2] != "E" or at(pos - 2, 6, "BACHER", "MACHER")))):
                    add("K")  # germanic 'ach'
                    pos += 2
                elif at(pos, 6, "CAESAR"):
                    add("S")
                    pos += 2
                elif at(pos, 4, "CHIA"):  # italian 'chianti'
                    add("K")
                    pos += 2
                elif at(pos, 2, "CH"):
                    if pos > 0 and at(pos, 4, "CHAE"):  # 'michael'
                        add("K", "X")
                        pos += 2
                    elif (pos == 0
                          and (at(pos + 1, 5, "HARAC", "HARIS")
                               or at(pos + 1, 3, "HOR", "HYM", "HIA", "HEM"))
                          and not at(0, 5, "CHORE")):
                        add("K")  # greek roots, 'chorus' etc.
                        pos += 2
                    elif (at(0, 4, "VAN ", "VON ") or at(0, 3, "SCH")
                          or at(pos - 2, 6, "ORCHES", "ARCHIT", "ORCHID")
                          or s[pos + 2] in ("T", "S")
                          or ((s[pos - 1] in "AOUE" or pos == 0)
                              and s[pos + 2] in ("L", "R", "N", "M", "B", "H", "F", "V", "W", " "))):
                        add("K")  # 'ch' for 'kh' sound
                        pos += 2
                    else:
                        if pos > 0:
                            if at(0, 2, "MC"):  # 'McHugh'
                                add("K")
                            else:
                                add("X", "K")
                        else:
                            add("X")
                        pos += 2
                elif at(pos, 2, "CZ") and not at(pos - 2, 4, "WICZ"):  # 'czerny'
                    add("S", "X")
                    pos += 2
                elif at(pos + 1, 3, "CIA"):  # 'focaccia'
                    add("X")
                    pos += 3
                elif at(pos, 2, "CC") and not (pos == 1 and word[0] == "M"):
                    if at(pos + 2, 1, "I", "E", "H") and not at(pos + 2, 2, "HU"):
                        if (pos == 1 and word[0] == "A") or at(pos - 1, 5, "UCCEE", "UCCES"):
                            add("KS")  # 'accident', 'succeed'
                        else:
                            add("X")  # 'bacci', other italian
                        pos += 3
                    else:
                        add("K")  # Pierce's rule
                        pos += 2
                elif at(pos, 2, "CK", "CG", "CQ"):
                    add("K")
                    pos += 2
                elif at(pos, 2, "CI", "CE", "CY"):
                    if at(pos, 3, "CIO", "CIE", "CIA"):
                        add("S", "X")
                    else:
                        add("S")
                    pos += 2
                else:
                    add("K")
                    if at(pos + 1, 2, " C", " Q", " G"):  # 'mac caffrey'
                        pos += 3
                    elif at(pos + 1, 1, "C", "K", "Q") and not at(pos + 1, 2, "CE", "CI"):
                        pos += 2
                    else:
                        pos += 1

            case "D":
                if at(pos, 2, "DG"):
                    if s[pos + 2] in "IEY":  # 'edge'
                        add("J")
                        pos += 3
                    else:
                        add("TK")
                        pos += 2
                elif at(pos, 2, "DT", "DD"):
                    add("T")
                    pos += 2
                else:
                    add("T")
                    pos += 1

            case "F":
                add("F")
                pos += 2 if s[pos + 1] == "F" else 1

            case "G":
                if s[pos + 1] == "H":
                    if pos > 0 and s[pos - 1] not in _VOWELS:
                        add("K")
                    elif pos == 0:
                        if s[pos + 2] == "I":  # 'ghislane'
                            add("J")
                        else:
                            add("K")
                    elif ((pos > 1 and s[pos - 2] in "BHD")
                          or (pos > 2 and s[pos - 3] in "BHD")
                          or (pos > 3 and s[pos - 4] in "BH")):
                        pass  # Parker's rule: silent, e.g. 'hugh', 'bough'
                    elif pos > 2 and s[pos - 1] == "U" and s[pos - 3] in "CGLRT":
                        add("F")  # 'laugh', 'cough', 'rough'
                    elif s[pos - 1] != "I":
                        add("K")
                    pos += 2
                elif s[pos + 1] == "N":
                    if pos == 1 and word[0] in _VOWELS and not slavo_germanic:
                        add("KN", "N")
                    elif not at(pos + 2, 2, "EY") and s[pos + 1] != "Y" and not slavo_germanic:
                        add("N", "KN")  # not e.g. 'cagney'
                    else:
                        add("KN")
                    pos += 2
                elif at(pos + 1, 2, "LI") and not slavo_germanic:  # 'tagliaro'
                    add("KL", "L")
                    pos += 2
                elif pos == 0 and (s[pos + 1] == "Y"
                                   or at(pos + 1, 2, "ES", "EP", "EB", "EL", "EY",
                                         "IB", "IL", "IN", "IE", "EI", "ER")):
                    add("K", "J")  # -ges-, -gep- etc. at start
                    pos += 2
                elif ((at(pos + 1, 2, "ER") or s[pos + 1] == "Y")
                      and not at(0, 6, "DANGER", "RANGER", "MANGER")
                      and not at(pos - 1, 1, "E", "I")
                      and not at(pos - 1, 3, "RGY", "OGY")):
                    add("K", "J")  # -ger-, -gy-
                    pos += 2
                elif s[pos + 1] in "EIY" or at(pos - 1, 4, "AGGI", "OGGI"):
                    if at(0, 4, "VAN ", "VON ") or at(0, 3, "SCH") or at(pos + 1, 2, "ET"):
                        add("K")  # obvious germanic
                    elif at(pos + 1, 4, "IER "):
                        add("J")  # soft french ending
                    else:
                        add("J", "K")
                    pos += 2
                else:
                    add("K")
                    pos += 2 if s[pos + 1] == "G" else 1

            case "H":
                # keep only if first & before a vowel, or between two vowels
                if (pos == 0 or s[pos - 1] in _VOWELS) and s[pos + 1] in _VOWELS:
                    add("H")
                    pos += 2
                else:
                    pos += 1

            case "J":
                if at(pos, 4, "JOSE") or at(0, 4, "SAN "):
                    if (pos == 0 and s[pos + 4] == " ") or at(0, 4, "SAN "):
                        add("H")  # obvious spanish, 'jose', 'san jacinto'
                    else:
                        add("J", "H")
                    pos += 1
                else:
                    if pos == 0:
                        add("J", "A")  # Yankelovich / Jankelowicz
                    elif s[pos - 1] in _VOWELS and not slavo_germanic and s[pos + 1] in "AO":
                        add("J", "H")  # spanish 'bajador'
                    elif pos == last:
                        add("J", "")
                    elif (s[pos + 1] not in ("L", "T", "K", "S", "N", "M", "B", "Z")
                          and s[pos - 1] not in ("S", "K", "L")):
                        add("J")
                    pos += 2 if s[pos + 1] == "J" else 1

            case "K":
                add("K")
                pos += 2 if s[pos + 1] == "K" else 1

            case "L":
                if s[pos + 1] == "L":
                    # spanish 'cabrillo', 'gallegos'
                    if ((pos == length - 3 and at(pos - 1, 4, "ILLO", "ILLA", "ALLE"))
                            or ((at(last - 1, 2, "AS", "OS") or s[last] in "AO")
                                and at(pos - 1, 4, "ALLE"))):
                        add("L", "")
                    else:
                        add("L")
                    pos += 2
                else:
                    add("L")
                    pos += 1

            case "M":
                if ((at(pos - 1, 3, "UMB")
                     and (pos + 1 == last or at(pos + 2, 2, "ER")))  # 'dumb', 'thumber'
                        or s[pos + 1] == "M"):
                    pos += 2
                else:
                    pos += 1
                add("M")

            case "N":
                add("N")
                pos += 2 if s[pos + 1] == "N" else 1

            case "P":
                if s[pos + 1] == "H":
                    add("F")
                    pos += 2
                elif s[pos + 1] in "PB":  # 'campbell', 'raspberry'
                    add("P")
                    pos += 2
                else:
                    add("P")
                    pos += 1

            case "Q":
                add("K")
                pos += 2 if s[pos + 1] == "Q" else 1

            case "R":
                # french 'rogier', but exclude 'hochmeier'
                if (pos == last and not slavo_germanic
                        and at(pos - 2, 2, "IE") and not at(pos - 4, 2, "ME", "MA")):
                    add("", "R")
                else:
                    add("R")
                pos += 2 if s[pos + 1] == "R" else 1

            case "S":
                if at(pos - 1, 3, "ISL", "YSL"):  # 'island', 'carlisle'
                    pos += 1
                elif pos == 0 and at(pos, 5, "SUGAR"):
                    add("X", "S")
                    pos += 1
                elif at(pos, 2, "SH"):
                    if at(pos + 1, 4, "HEIM", "HOEK", "HOLM", "HOLZ"):
                        add("S")  # germanic
                    else:
                        add("X")
                    pos += 2
                elif at(pos, 3, "SIO", "SIA") or at(pos, 4, "SIAN"):
                    if not slavo_germanic:
                        add("S", "X")  # italian & armenian
                    else:
                        add("S")
                    pos += 3
                elif (pos == 0 and s[pos + 1] in ("M", "N", "L", "W")) or s[pos + 1] == "Z":
                    add("S", "X")  # 'smith' matches 'schmidt', -sz- in slavic
                    pos += 2 if s[pos + 1] == "Z" else 1
                elif at(pos, 2, "SC"):
                    if s[pos + 2] == "H":  # Schlesinger's rule
                        if at(pos + 3, 2, "OO", "ER", "EN", "UY", "ED", "EM"):
                            if at(pos + 3, 2, "ER", "EN"):  # 'schermerhorn'
                                add("X", "SK")
                            else:
                                add("SK")  # dutch 'school', 'schooner'
                        elif pos == 0 and s[3] not in _VOWELS and s[3] != "W":
                            add("X", "S")
                        else:
                            add("X")
                        pos += 3
                    elif at(pos + 2, 1, "I", "E", "Y"):
                        add("S")
                        pos += 3
                    else:
                        add("SK")
                        pos += 3
                else:
                    if pos == last and at(pos - 2, 2, "AI", "OI"):
                        add("", "S")  # french 'resnais', 'artois'
                    else:
                        add("S")
                    pos += 2 if s[pos + 1] in "SZ" else 1

            case "T":
                if at(pos, 4, "TION"):
                    add("X")
                    pos += 3
                elif at(pos, 3, "TIA", "TCH"):
                    add("X")
                    pos += 3
                elif at(pos, 2, "TH") or at(pos, 3, "TTH"):
                    if at(pos + 2, 2, "OM", "AM") or at(0, 4, "VON ", "VAN ") or at(0, 3, "SCH"):
                        add("T")  # 'thomas', 'thames', germanic
                    else:
                        add("0", "T")
                    pos += 2
                elif s[pos + 1] in "TD":
                    add("T")
                    pos += 2
                else:
                    add("T")
                    pos += 1

            case "V":
                add("F")
                pos += 2 if s[pos + 1] == "V" else 1

            case "W":
                if at(pos, 2, "WR"):
                    add("R")
                    pos += 2
                elif pos == 0 and (s[pos + 1] in _VOWELS or at(pos, 2, "WH")):
                    if s[pos + 1] in _VOWELS:
                        add("A", "F")  # Wasserman matches Vasserman
                    else:
                        add("A")
                    pos += 1
                elif ((pos == last and pos > 0 and s[pos - 1] in _VOWELS)  # Arnow/Arnoff
                      or at(pos - 1, 5, "EWSKI", "EWSKY", "OWSKI", "OWSKY")
                      or at(0, 3, "SCH")):
                    add("", "F")
                    pos += 1
                elif at(pos, 4, "WICZ", "WITZ"):  # polish 'filipowicz'
                    add("TS", "FX")
                    pos += 4
                else:
                    pos += 1

            case "X":
                if not (pos == last
                        and (at(pos - 3, 3, "IAU", "EAU") or at(pos - 2, 2, "AU", "OU"))):
                    add("KS")  # silent in french 'breaux'
                pos += 2 if s[pos + 1] in "CX" else 1

            case "Z":
                if s[pos + 1] == "H":  # chinese pinyin 'zhao'
                    add("J")
                    pos += 2
                else:
                    if at(pos + 1, 2, "ZO", "ZI", "ZA") \
                            or (slavo_germanic and pos > 0 and s[pos - 1] != "T"):
                        add("S", "TS")
                    else:
                        add("S")
                    pos += 2 if s[pos + 1] == "Z" else 1

            case _:
                pos += 1

    return "".join(pri), "".join(sec)
