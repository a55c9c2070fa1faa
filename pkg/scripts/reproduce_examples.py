"""Recompute the three worked examples (1023 jump, peak-9232 census, representation of 7)."""
from collatz_obs.accel import decompose, fast_trajectory, jump
from collatz_obs.cli import render_identity
from collatz_obs.core import t_step
from collatz_obs.families import census_brute, census_classes
from collatz_obs.representation import eval_representation, extract_representation


def main():
    d = decompose(1023)
    rep = jump(d, check=True)
    print(f"1023 = 2^{d.n}*{d.x} + 2^{d.n - 1} - 1")
    print(f"  jump lands on {rep.landed} after {rep.steps_skipped} steps, next T -> {t_step(rep.landed).after}")
    ft = fast_trajectory(1023)
    print(f"  accelerated: {len(ft.rounds)} rounds, {ft.total_steps} T-steps, {ft.steps_skipped} skipped")

    brute = census_brute(1000, 9232)
    classes = census_classes(1000, 9232)
    print(f"starts <= 1000 peaking at 9232: {brute.count} (classes method agrees: {brute.records == classes.records})")

    r = extract_representation(7)
    ev = eval_representation(r)
    print(render_identity(7, r.exponents), f"  [numerator {ev.numerator} = 3^{r.k + 1} * {ev.value}]")


if __name__ == "__main__":
    main()
