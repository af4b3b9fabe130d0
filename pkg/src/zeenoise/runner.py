"""Run orchestration: compute spectra for a scenario and write tables.

One CSV table is written per sweep value, with the fixed column layout

    omega_over_gamma, s_opt_e1, s_opt_e2, s_x_e1, s_x_e2 [, oracle columns]

(e1 = driven, e2 = orthogonal polarization; s_opt = optical spectrum;
s_x = quadrature noise at the amplitude-quadrature angle unless the scenario
requests an explicit angle). Observables that do not apply are left as
empty fields, never written as zeros. Each CSV gets a JSON sidecar holding
every input parameter, the convention tags, and the carrier/dephasing
values, so any number in the table can be recomputed from the sidecar
alone. The pipeline is deterministic: no randomness anywhere, and the
thread-level partition concatenates per-frequency results in grid order, so
outputs are bit-identical for any --threads value.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import json

import numpy as np

from .angular import LevelScheme
from .conventions import CONVENTIONS_VERSION, QUADRATURE_CONVENTIONS
from .dynamics import DriveConfig, build_generator, steady_state
from .errors import (
    ArgumentError,
    DegenerateSteadyStateError,
    NumericalError,
    StationarityError,
)
from .field import PolarizationBasis, PolarizationMode, excess_noise_input
from .langevin import diffusion_matrix
from .observables import (
    amplitude_quadrature_angle,
    optical_spectrum,
    quadrature_noise,
)
from .oracles import mollow_spectrum, qrt_spectrum
from .propagation import MediumParams, OutputField, propagate

BASE_COLUMNS = ("omega_over_gamma", "s_opt_e1", "s_opt_e2", "s_x_e1", "s_x_e2")
ORACLE_COLUMNS = {
    "qrt": ("qrt_opt_e1", "qrt_opt_e2"),
    "mollow": ("mollow_opt_e1",),
}
OUTPUT_DIR_ENV = "ZEENOISE_OUT"
DEFAULT_OUTPUT_DIR = "zeenoise-out"


@dataclass
class PointResult:
    """Computed table for one scenario point (one sweep value)."""

    grid: np.ndarray
    columns: dict      # column name -> float array, or None (empty fields)
    metadata: dict


def compute_point(scenario, threads=None):
    """Run the full pipeline for one (effective) scenario."""
    if scenario.grid is None:
        raise ArgumentError("scenario has no frequency grid")
    scheme = LevelScheme(fg=scenario.fg, fe=scenario.fe, gamma=scenario.gamma)
    basis = PolarizationBasis(PolarizationMode(scenario.polarization))
    drive = DriveConfig(
        basis=basis, rabi=scenario.rabi, detuning=scenario.detuning
    )
    liou = build_generator(scheme, drive)
    steady = steady_state(liou)
    diff = diffusion_matrix(liou, steady)
    input_matrix = excess_noise_input(scenario.eps_a, scenario.eps_p)
    medium = MediumParams(b0=scenario.b0)
    grid = scenario.grid.build()

    out = _propagate_partitioned(
        input_matrix, medium, liou, diff, steady, grid, threads
    )

    if scenario.quadrature_theta is not None:
        theta = float(scenario.quadrature_theta)
        theta_source = "explicit"
    else:
        theta = amplitude_quadrature_angle(out.carrier[1])
        theta_source = "amplitude"

    columns = {
        "omega_over_gamma": grid.copy(),
        "s_opt_e1": optical_spectrum(out.spectra[1]).values,
        "s_opt_e2": optical_spectrum(out.spectra[2]).values,
        "s_x_e1": quadrature_noise(out.spectra[1], theta).values,
        "s_x_e2": quadrature_noise(out.spectra[2], theta).values,
    }

    kappa2 = 0.25 * scenario.b0 * scheme.gamma
    wabs = np.abs(grid)
    for oracle in scenario.oracles:
        if oracle == "qrt":
            for comp, name in ((1, "qrt_opt_e1"), (2, "qrt_opt_e2")):
                op = basis.operator(scheme, comp)
                one_sided = qrt_spectrum(
                    liou, steady, op.conj().T, op, wabs
                )
                columns[name] = kappa2 * 2.0 * one_sided.real
        elif oracle == "mollow":
            if scenario.polarization == "circular":
                columns["mollow_opt_e1"] = kappa2 * mollow_spectrum(
                    wabs, scenario.rabi, scenario.detuning, scenario.gamma
                )
            else:
                columns["mollow_opt_e1"] = None

    metadata = {
        "conventions_version": CONVENTIONS_VERSION,
        "quadrature_conventions": dict(QUADRATURE_CONVENTIONS),
        "parameters": {
            "fg": scenario.fg,
            "fe": scenario.fe,
            "gamma": scenario.gamma,
            "polarization": scenario.polarization,
            "rabi": scenario.rabi,
            "detuning": scenario.detuning,
            "b0": scenario.b0,
            "eps_a": scenario.eps_a,
            "eps_p": scenario.eps_p,
        },
        "grid": {
            "omega_min": scenario.grid.omega_min,
            "omega_max": scenario.grid.omega_max,
            "count": scenario.grid.count,
            "spacing": scenario.grid.spacing,
            "symmetrize": scenario.grid.symmetrize,
        },
        "oracles": list(scenario.oracles),
        "quadrature_theta": theta,
        "quadrature_theta_source": theta_source,
        "carrier_e1": [out.carrier[1].real, out.carrier[1].imag],
        "carrier_e2": [out.carrier[2].real, out.carrier[2].imag],
        "phi_e1": out.phi[1],
        "phi_e2": out.phi[2],
        "columns": [c for c in _column_order(scenario)],
    }
    return PointResult(grid=grid, columns=columns, metadata=metadata)


def _column_order(scenario):
    order = list(BASE_COLUMNS)
    for oracle in scenario.oracles:
        order.extend(ORACLE_COLUMNS[oracle])
    return order


def _propagate_partitioned(
    input_matrix, medium, liou, diff, steady, grid, threads
):
    """propagate(), statically partitioned over contiguous grid chunks."""
    if threads is None or threads <= 0:
        threads = os.cpu_count() or 1
    threads = max(1, min(int(threads), grid.size))
    if threads == 1:
        return propagate(input_matrix, medium, liou, diff, steady, grid)
    chunks = np.array_split(grid, threads)

    def work(chunk):
        return propagate(input_matrix, medium, liou, diff, steady, chunk)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(work, chunks))

    def stitch_sm(pick):
        return type(pick(parts[0]))(
            np.concatenate([np.atleast_1d(pick(p).s11) for p in parts]),
            np.concatenate([np.atleast_1d(pick(p).s12) for p in parts]),
            np.concatenate([np.atleast_1d(pick(p).s21) for p in parts]),
            np.concatenate([np.atleast_1d(pick(p).s22) for p in parts]),
            grid=grid,
        )

    spectra = {c: stitch_sm(lambda p, c=c: p.spectra[c]) for c in (1, 2)}
    atomic = {c: stitch_sm(lambda p, c=c: p.atomic[c]) for c in (1, 2)}
    return OutputField(
        grid=grid,
        carrier=parts[0].carrier,
        phi=parts[0].phi,
        spectra=spectra,
        atomic=atomic,
        cross=None,
    )


def _format(value):
    return f"{value:.17g}"


def write_point(result, out_dir, label):
    """Write `<label>.csv` and `<label>.json`; returns the two paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / f"{label}.csv"
    json_path = out_dir / f"{label}.json"

    order = result.metadata["columns"]
    lines = [", ".join(order)]
    npoints = result.grid.size
    for i in range(npoints):
        fields = []
        for name in order:
            col = result.columns.get(name)
            fields.append("" if col is None else _format(col[i]))
        lines.append(",".join(fields))
    csv_path.write_text("\n".join(lines) + "\n")

    json_path.write_text(
        json.dumps(result.metadata, indent=2, sort_keys=True) + "\n"
    )
    return [csv_path, json_path]


def run_scenario(scenario, out_dir, threads=None):
    """Compute and write one table per sweep value; returns written paths."""
    written = []
    for value in scenario.sweep_values():
        effective = scenario.with_sweep_value(value)
        if value is None:
            label = scenario.name
        else:
            label = f"{scenario.name}_{scenario.sweep.parameter}_{value:g}"
        try:
            result = compute_point(effective, threads=threads)
        except (
            DegenerateSteadyStateError,
            StationarityError,
            NumericalError,
        ) as exc:
            exc.args = (f"scenario point '{label}': {exc}",)
            raise
        result.metadata["label"] = label
        result.metadata["sweep_parameter"] = (
            None if scenario.sweep is None else scenario.sweep.parameter
        )
        result.metadata["sweep_value"] = value
        written.extend(write_point(result, out_dir, label))
    return written
