#!/usr/bin/env python3
"""Survey the decision ladder over random elements and tally which rule
decides each one.

Run with:  python scripts/verdict_survey.py --count 300 --max-exp 4 --seed 7
"""

import argparse
import random
import time
from collections import Counter

from weylkit import Outcome, WeylElement, analyze


def random_element(rng, max_exp, max_terms, coeff_bound):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        c = rng.randint(-coeff_bound, coeff_bound)
        if c:
            terms[(rng.randint(0, max_exp), rng.randint(0, max_exp))] = c
    return WeylElement(terms)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--max-exp", type=int, default=4)
    ap.add_argument("--max-terms", type=int, default=5)
    ap.add_argument("--coeff-bound", type=int, default=9)
    ap.add_argument("--box", type=int, default=4)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    outcomes = Counter()
    deciding_rule = Counter()
    started = time.perf_counter()
    for _ in range(args.count):
        x = random_element(rng, args.max_exp, args.max_terms, args.coeff_bound)
        verdict = analyze(x, box=args.box)
        outcomes[verdict.outcome] += 1
        if verdict.reasons:
            deciding_rule[verdict.reasons[0].rule.value] += 1
        else:
            deciding_rule["(none: unknown)"] += 1
    elapsed = time.perf_counter() - started

    print(f"{args.count} elements, exponents <= {args.max_exp}, box {args.box}, "
          f"{elapsed:.2f}s ({1000 * elapsed / args.count:.1f} ms/element)")
    print()
    print("outcomes:")
    for outcome in Outcome:
        print(f"  {outcome.value:<12} {outcomes.get(outcome, 0)}")
    print()
    print("deciding rule:")
    for rule, n in deciding_rule.most_common():
        print(f"  {rule:<26} {n}")


if __name__ == "__main__":
    main()
