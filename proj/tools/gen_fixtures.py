#!/usr/bin/env python3
# Copyright 2026 The qcmx Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the bundled FCIDUMP fixtures under data/ (requires pyscf)."""

import argparse
import os

from pyscf import fci, gto, scf
from pyscf.tools import fcidump

FIXTURES = {
    # name: (atoms, basis)
    "h2_sto3g_0.7414": ("H 0 0 0; H 0 0 0.7414", "sto-3g"),
    "h2_sto3g_1.5": ("H 0 0 0; H 0 0 1.5", "sto-3g"),
    "h2_sto3g_2.0": ("H 0 0 0; H 0 0 2.0", "sto-3g"),
    "h2_631g_2.0": ("H 0 0 0; H 0 0 2.0", "6-31g"),
    "h4_linear_sto6g_2.0": ("H 0 0 0; H 0 0 2; H 0 0 4; H 0 0 6", "sto-6g"),
    "h4_square_sto6g_2.0": ("H 0 0 0; H 2 0 0; H 2 2 0; H 0 2 0", "sto-6g"),
}


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data"))
    args = parser.parse_args()
    os.makedirs(args.out, exist_ok=True)
    for name, (atoms, basis) in FIXTURES.items():
        mol = gto.M(atom=atoms, basis=basis, unit="Angstrom", symmetry=True, verbose=0)
        mf = scf.RHF(mol)
        mf.conv_tol = 1e-12
        mf.kernel()
        path = os.path.join(args.out, name + ".fcidump")
        fcidump.from_scf(mf, path, tol=1e-14)
        e_fci = fci.FCI(mf).kernel()[0]
        print(f"{name}: norb={mol.nao} E_HF={mf.e_tot:.10f} E_FCI={e_fci:.10f}")


if __name__ == "__main__":
    main()
