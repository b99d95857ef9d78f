"""How words become phonetic codes, and why misspellings stop mattering.

Run: python demos/01_phonetic_codes.py
"""

from phonosearch.phonetics import encode, normalize, tokenize

print("Every word is folded to A-Z and encoded into two pronunciation codes:")
print()
for raw in ("Smith", "Schmidt", "Khulna", "khuln,", "Rahim", "Raheem", "Dinajpur"):
    word = normalize(raw)
    pair = encode(word)
    print(f"  {raw!r:12} -> {word:10} primary={pair.primary:5} secondary={pair.secondary:5}")

print()
print("'Khulna' and the typo 'khuln' share the primary code, so a query")
print("containing the typo still lands on every Khulna record. 'Smith' and")
print("'Schmidt' meet through the secondary code XMT instead, which is why")
print("both codes are indexed.")
print()
print("Sentences become token lists; digits and punctuation fall away:")
print(f"  {'Rahim Dinajpur':24} -> {tokenize('Rahim Dinajpur')}")
print(f"  {'call 8801700041114 now':24} -> {tokenize('call 8801700041114 now')}")
