"""Run every classification verifier and show what it established."""
from kleincurves import VERIFIERS, enumerate_profiles

for degG in range(4, 8):
    print(f"degree {degG}: (r1, r2) in {enumerate_profiles(degG).pairs()}")
print()

for name, fn in VERIFIERS.items():
    rep = fn()
    print(f"{name}: {'PASS' if rep.passed else 'FAIL'} after {len(rep.checks)} checks")
    for key, value in rep.values.items():
        if isinstance(value, list):
            continue
        text = str(value)
        print(f"    {key}: {text if len(text) < 90 else text[:87] + '...'}")
    for r in rep.representatives:
        print(f"    representative {r['contact_curve']}  ->  degree {r['degree']}, branch {r['branch']}")
