"""Peeling functions into canalizing layers.

Every nested canalizing function has one canonical form: ordered groups of
variables (layers), a stored input per variable, and an output bit.  The
decomposition routine peels the layers off the truth table; composing them
back is a bit-exact round trip.  Functions outside the class are rejected
with a reason.
"""

from ncflab import (
    AnfPolynomial,
    canalizing_pairs,
    compose,
    decompose,
    format_decomposition,
    parse_decomposition,
)

EXAMPLES = [
    "x1*x2*x3 + x1*x2 + x3",   # two layers: {x3}, then {x1, x2}
    "x1*x2*x3",                # one layer of three variables
    "x1*(x2+1)",               # one layer, mixed inputs
    "x1*x2*x3*x4 + x1*x2 + x1",  # three layers, nested singletons absorbed
    "x1 + x2",                 # parity: no canalizing variable at all
    "x1*x3",                   # declared on 3 variables: x2 never matters
]

for text in EXAMPLES:
    arity = max((int(ch) for ch in text if ch.isdigit()), default=0)
    f = AnfPolynomial.parse(text, arity).to_function()
    result = decompose(f)
    print(f"f = {text}")
    print(f"  canalizing pairs: {canalizing_pairs(f)}")
    if result.is_ncf:
        d = result.decomposition
        print(f"  layers {format_decomposition(d)}  structure {d.structure()}")
        assert compose(d) == f
        assert parse_decomposition(format_decomposition(d)) == d
        print("  compose round trip: ok")
    else:
        print(f"  not nested canalizing: {result.reason.value}")
    print()

# The text form is a stable interchange format.
d = parse_decomposition("1; [3:1 | 1:0, 2:0]")
print(f"parsed '1; [3:1 | 1:0, 2:0]' back to the cascade: {compose(d).to_hex()}")
