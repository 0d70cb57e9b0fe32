#!/usr/bin/env python3
"""Print the class labels of every power-set combination for m = 0..4.

Rows are (UP-algebra type, semigroup kind); an x marks a label that holds.
"""

from upsemigroups.core import ClassLabel, distributivity_profile
from upsemigroups.powerset import (
    SEMIGROUP_KINDS,
    Universe,
    build_power_semigroup,
    build_power_up_algebra,
    classify_combo,
)


def main():
    for m in range(5):
        u = Universe(m)
        print(f"\nuniverse size {m} (order {u.order})")
        print(f"{'type':>4} {'kind':>9}  dl dr sl sr  " + " ".join(f"{l.value:>2}" for l in ClassLabel))
        for up_type in (1, 2):
            for kind in SEMIGROUP_KINDS:
                prof = distributivity_profile(build_power_up_algebra(u, up_type), build_power_semigroup(u, kind))
                flags = "  ".join("T" if b else "." for b in prof.as_tuple())
                labels = classify_combo(u, up_type, kind)
                marks = " ".join(f"{'x' if l in labels else '.':>2}" for l in ClassLabel)
                print(f"{up_type:>4} {kind.value:>9}   {flags}   {marks}")


if __name__ == "__main__":
    main()
