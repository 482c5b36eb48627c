# Supporting forms and the inequality certificates behind each facet.
import numpy as np

from lenshull import GroupSpec, certify_triangulation, predict
from lenshull.certify import certify_pair, support_form
from lenshull.predictor import spec_pairs

spec = GroupSpec(3, 11, 1, 2)
for pair in spec_pairs(spec):
    form = support_form(spec, pair)
    rep = certify_pair(spec, pair)
    print(f"pair {{{pair.A}, {pair.B}}}: Z = {form.Z:.6f}, rho = {np.round(form.rho, 6)}")
    print(f"   det M = {rep.det_M:.6f}, lattice margin = {rep.lattice_margin:.3e}, all pass: {rep.all_pass}")

cert = certify_triangulation(predict(spec))
print("whole triangulation certified:", cert.all_pass,
      f"(smallest support gap {min(cert.facet_margins):.3e})")
