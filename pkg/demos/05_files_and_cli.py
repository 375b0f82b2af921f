"""Writing a window of the shift space to text files and reading it back.

The same round trip is available from the shell::

    triperi materialize --window 12 --space-out w.fms --map-out w.fmap --remap-boundary-to-star
    triperi classify w.fms w.fmap --format json
"""
import tempfile
from pathlib import Path

from triperi import PaperSpaceParams, classify, make_paper_space
from triperi.io import format_fms, load_fmap, load_fms, materialize_paper_space, save_fmap, save_fms

space, _ = make_paper_space(PaperSpaceParams(window=12))
finite, T = materialize_paper_space(space, remap_boundary_to_star=True)
print(format_fms(finite).splitlines()[:6])

with tempfile.TemporaryDirectory() as tmp:
    sp, mp = Path(tmp, "w.fms"), Path(tmp, "w.fmap")
    save_fms(finite, sp)
    save_fmap(T, mp)
    again = load_fms(sp)
    T2 = load_fmap(mp, again)
    print("identical matrix after reload:", again.matrix == finite.matrix)
    r = classify(again, T2)
    # x12 now jumps straight to x*, so triangles at the boundary grow instead of shrinking
    print("alpha* =", r.alpha_star, "L =", r.lipschitz, "fixed points:", [again.name(p) for p in r.fixed_points])
