"""Print the reconciliation tables as aligned text."""
from circlestates.reconcile import build_report


def main():
    for name, rows in build_report().items():
        print(f"\n== {name} ==")
        cols = list(rows[0])
        print("  ".join(f"{c:>18}" for c in cols))
        for row in rows:
            print("  ".join(f"{row[c]:>18.10g}" for c in cols))


if __name__ == "__main__":
    main()
