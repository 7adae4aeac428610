"""Recompute every intermediate quantity for the ten-variable example psi."""
from bddkenum.counting import count_models, gen_poly, node_probabilities
from bddkenum.enumerators import method1_sieve, method3_run, path_dnf
from bddkenum.fixtures import psi
from bddkenum.rows import format_row
from bddkenum.schedule import compute_card1, compute_card2

K = 4


def main():
    bdd = psi()
    probs = node_probabilities(bdd)
    card1 = compute_card1(bdd)
    card2 = compute_card2(bdd, K, card1)
    print("node var    p   card1    card2(k=4)")
    for a in bdd.shelling_from_below():
        print(f"{bdd.name(a):>4} {bdd.var(a):>3} {str(probs[a]):>5} "
              f"{str(card1[a]):>8} {str(card2[a]):>8}")
    print(f"\nmodels = {count_models(bdd)}")
    print("N_k    =", " ".join(map(str, gen_poly(bdd))))
    print("\northogonal DNF:")
    print(path_dnf(bdd).to_text(), end="")
    print(f"\nsieved rows, k={K}:")
    print(method1_sieve(bdd, K).to_text(K), end="")
    run = method3_run(bdd, K)
    for name in "de":
        table = run.tables[bdd.node_id(name)]
        print(f"\nweight-trimmed rows at {name}:")
        for row, w in table.entries:
            print(f"  {format_row(row)}   weight {w}")
    print(f"\nschedule-driven rows, k={K}:")
    print(run.rows.to_text(K), end="")


if __name__ == "__main__":
    main()
