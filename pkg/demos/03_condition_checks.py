"""Check every sufficient condition at one parameter point, both report forms.

Each condition is reported twice: `as_stated` transcribes the inequality in
its conventional printed shape, `as_derived` re-assembles the weighted
coefficient-series bound that the condition actually controls and compares it
against what the underlying coefficient criterion requires.  The two forms
disagree for some identifiers (most visibly T4.1, whose stated right-hand
side is the order itself); the checkers surface that rather than hide it.
"""

from wrightmaps import THEOREM_IDS, ConvolutionSpec, WrightParams, stated_hypothesis

spec = ConvolutionSpec(
    p1=WrightParams(1.0, 3.0, 1.0, 3.0),
    p2=WrightParams(1.5, 2.0, 1.5, 2.0),
    sigma=0.25,
)
order = 0.1
b1 = 0.2

print(f"kernels: p1={spec.p1}, p2={spec.p2}, |sigma|={abs(spec.sigma)}, order={order}, b1={b1}\n")
print(f"{'id':6s} {'form':11s} {'lhs':>12s} {'rhs':>12s} {'margin':>12s}  ok")
for tid in THEOREM_IDS:
    stated, derived = stated_hypothesis(tid, spec, order, b1)
    for rep in (stated, derived):
        flag = "yes" if rep.satisfied else "NO"
        print(f"{rep.id:6s} {rep.form:11s} {rep.lhs:12.6f} {rep.rhs:12.6f} {rep.margin:12.6f}  {flag}")

print("\nNote T4.1: the derived form passes while the stated form (rhs = order)")
print("cannot, because its left side always contains the full W'(1) >= 1 term.")
