"""Two maps on the equilateral three-point space.

Both maps shrink the only triangle {x, y, z} to a degenerate one with
perimeter 2, so both contract perimeters with coefficient 2/3.  Only the
first one has fixed points: the second swaps x and y, which is exactly the
period-two behaviour the fixed-point theorem has to exclude.
"""
from triperi import classify, make_three_point_example, orbit, verify_metric_axioms

for variant in "AB":
    space, T = make_three_point_example(variant)
    name = space.name
    print(f"--- variant {variant}")
    print("metric axioms:", "ok" if verify_metric_axioms(space) else "violated")
    print("map:", ", ".join(f"{name(p)} -> {name(T(p))}" for p in space.points()))

    report = classify(space, T)
    print("perimeter coefficient:", report.alpha_star, "on", [name(p) for p in report.alpha_witness])
    print("lipschitz coefficient:", report.lipschitz, "(not a contraction)" if not report.is_contraction else "")
    witness = report.condition_i_witness
    print("period-two point:", "none" if witness is None else name(witness))
    print("fixed points:", [name(p) for p in report.fixed_points])

    # iterate from z; variant B never settles
    trace = orbit(T, space.lookup("z"), 6)
    print("orbit from z:", " -> ".join(name(p) for p in trace.points), f"({trace.stop.value})")
