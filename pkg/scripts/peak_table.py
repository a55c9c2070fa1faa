"""Most common orbit peaks for starts up to a bound, with both census methods timed."""
import argparse
import time

from collatz_obs.families import census_brute, census_classes, peak_histogram


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=1000)
    ap.add_argument("--top", type=int, default=10)
    args = ap.parse_args()

    hist = peak_histogram(args.max)
    ranked = sorted(hist.items(), key=lambda kv: (-kv[1], kv[0]))[: args.top]
    print(f"{'peak':>10} {'count':>6} {'brute s':>8} {'classes s':>9}")
    for p, n in ranked:
        t0 = time.perf_counter()
        b = census_brute(args.max, p)
        t1 = time.perf_counter()
        c = census_classes(args.max, p)
        t2 = time.perf_counter()
        assert b.records == c.records and b.count == n
        print(f"{p:>10} {n:>6} {t1 - t0:>8.3f} {t2 - t1:>9.3f}")


if __name__ == "__main__":
    main()
