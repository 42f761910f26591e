"""Farey words from cutting sequences.

Generates the word of each small slope, shows the concatenate-and-flip
rule that builds the mediant's word from its parents, and checks the
one-letter collapse of the length-(2q-1) prefix.
"""

from fareyslice import (
    Slope,
    concat_flip,
    enumerate_farey,
    farey_word,
    mediant,
    parents,
    prefix_conjugacy,
)

print("Farey words for q <= 6:")
for s in enumerate_farey(6):
    print(f"  {str(s):>5}  {farey_word(s)}")

a, b = Slope(1, 3), Slope(2, 5)
m = mediant(a, b)
print(f"\nword({a}) * word({b}) with one sign flipped == word({m}):")
print(f"  {farey_word(a)} * {farey_word(b)}")
print(f"  -> {concat_flip(a, b)}")
assert concat_flip(a, b) == farey_word(m)

print("\nprefix collapse (first 2q-1 letters reduce to one letter):")
for s in (Slope(1, 2), Slope(2, 5), Slope(3, 8)):
    letter = prefix_conjugacy(s)
    print(f"  {s}: collapses to {letter.char} (denominator is "
          f"{'even' if s.q % 2 == 0 else 'odd'})")
