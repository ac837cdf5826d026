"""Cyclic groups: closed forms against the brute-force oracle.

For a cyclic group of prime-power order the power graph is complete, so its
automorphism group is one big symmetric group. For any other cyclic order n,
the vertices split into one class per divisor d > 1 of n (the generators of
the unique subgroup of order d), each class freely permutable and nothing
else moving: the group is the direct product of S_phi(d) over those divisors.
The oracle recounts every value by explicit search.
"""

from pga import analyze, build_power_graph, count_automorphisms, realize

print(f"{'group':>7} {'method':>18} {'expression':>24} {'order':>12} {'oracle':>12}")
for n in (4, 8, 9, 6, 10, 12, 15, 18, 20):
    spec = f"Z({n})"
    report = analyze(spec)
    oracle = count_automorphisms(build_power_graph(realize(spec)).to_weighted_graph())
    flag = "" if oracle == report.order else "  <-- DISAGREES"
    print(
        f"{spec:>7} {report.method:>18} {report.expression_str:>24} "
        f"{report.order:>12} {oracle:>12}{flag}"
    )

print("\nnote Z(20): 46 million automorphisms, counted without listing a single one;")
print("the oracle multiplies orbit sizes down an individualization chain instead.")
