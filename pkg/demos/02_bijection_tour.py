"""The three structure-preserving maps, applied step by step.

pi collapses every peak NE into a single diagonal step; delta undoes it.
tau trims one E and one N off a path in a way that respects deep-valley
avoidance.  A generic verifier then certifies bijectivity over whole
enumerated families rather than on cherry-picked examples.
"""

from delannoy import (
    PathFamilySpec,
    delta_map,
    parse_path,
    pi_map,
    tau_inverse,
    tau_map,
    verify_bijection,
)

p = parse_path("NENNEE")
q = pi_map(p)
print(f"pi({p.word}) = {q.word}")
print(f"  endpoints agree: {p.end} == {q.end}")
print(f"  peaks in, diagonals out: {p.word.count('NE')} NE factors, {q.word.count('D')} D steps")
print(f"delta({q.word}) = {delta_map(q).word} (round trip)")
print()

# tau has three rules; which one fires depends on the shape of the word.
for word in ["EN", "ENNE", "NEEEN", "ENNNEEN"]:
    image = tau_map(parse_path(word))
    print(f"tau({word}) = {image.word or '(empty)'}")
print()

# The inverse reads the first letter to decide which rule to undo.
for word in ["", "EE", "NE"]:
    src = tau_inverse(parse_path(word))
    print(f"tau_inverse({word or '(empty)'}) = {src.word}")
print()

# Certify pi as a bijection between two-pattern families on a 5x5 grid of
# endpoints.  The domain avoids D and EENN in the augmented word (one E
# glued on the front, one N on the back); the codomain avoids NE and EN.
ok = True
for n in range(6):
    for m in range(6):
        domain = PathFamilySpec(target=(n, m), forbidden_aug=frozenset({"D", "EENN"}))
        codomain = PathFamilySpec(target=(n, m), forbidden=frozenset({"NE", "EN"}))
        report = verify_bijection(domain, pi_map, codomain)
        ok = ok and report.ok
        if n == m:
            print(
                f"pi at ({n},{m}): domain {report.domain_size}, "
                f"codomain {report.codomain_size}, ok={report.ok}"
            )
print(f"\nall endpoints verified: {ok}")

# A deliberately wrong map produces witnesses instead of a green light.
bad = verify_bijection(
    PathFamilySpec(target=(1, 1), forbidden_aug=frozenset({"D", "EENN"})),
    lambda path: path,
    PathFamilySpec(target=(1, 1), forbidden=frozenset({"NE", "EN"})),
)
print(f"\nidentity map posing as pi: ok={bad.ok}")
for witness in bad.counterexamples[:3]:
    print(f"  witness: {witness[0]}")
