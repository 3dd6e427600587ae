"""
Writing your own identities
===========================

Identities can be stated as text and run over a parameter box.  Ranges
may depend on earlier parameters.
"""

from hypverify.dsl import parse_identity_file, render_spec, run_spec

SOURCE = """
# Chu-Vandermonde in polynomial form: holds
identity "vandermonde" {
  params n in 0..5, m in 0..n;
  lhs = sum(j, 0, m, binom(n, j) * binom(n, m - j));
  rhs = binom(2*n, m);
}

# a deliberately wrong guess
identity "bad guess" {
  params n in 1..3;
  lhs = sum(k, 0, n, (-1)^k * binom(n, k) * x^k / (k + 1));
  rhs = (1 - x)^n;
}
"""

for spec in parse_identity_file(SOURCE):
    reports = run_spec(spec)
    failed = [r for r in reports if not r.equal]
    print(f"{spec.name}: {len(reports) - len(failed)}/{len(reports)} hold")
    for r in failed:
        print("   ", r.params, "difference", r.difference)

# canonical pretty-printed form
print(render_spec(parse_identity_file(SOURCE)[1]))
