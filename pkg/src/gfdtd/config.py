"""Run configuration: JSON document parsing, validation, serialization.

Keys carry their unit in the name (dx_angstrom, height_ev) and are
converted to SI on parse.  Unknown keys are rejected so typos cannot
silently fall back to defaults.

Minimal 2-D example:

    {
      "grid":      {"dims": 2, "nx": 200, "ny": 200, "dx_angstrom": 0.1},
      "scheme":    {"N": 2, "stencil_order": 2, "mu": 0.25},
      "init":      {"sigma_angstrom": 1.0, "lambda_angstrom": 1.0,
                    "center_j": 50, "center_k": 50},
      "potential": {"type": "quadrant_barrier", "height_ev": 100.0,
                    "j_min": 101, "k_min": 101},
      "run":       {"steps": 500, "snapshot_every": 100, "out_dir": "out"}
    }

The potential section may be omitted for free space.
"""

import json
from dataclasses import dataclass

from .errors import ConfigurationError
from .fields import ANGSTROM, ELECTRON_MASS, EV, HBAR, GridSpec, PhysicalParams
from .scenarios import BarrierSpec, GaussianPacketSpec
from .scheme import SchemeConfig
from .stencils import StencilOrder


@dataclass(frozen=True)
class RunConfig:
    # grid
    dims: int
    nx: int
    ny: int | None
    dx_angstrom: float
    # physics
    mass_kg: float
    hbar: float
    # scheme
    N: int
    stencil_order: int
    mu: float
    # init
    sigma_angstrom: float
    lambda_angstrom: float
    center_j: int
    center_k: int | None
    normalize: bool
    # potential (None = free space)
    height_ev: float | None
    j_min: int | None
    k_min: int | None
    # run
    steps: int
    snapshot_every: int
    out_dir: str
    full_field_dumps: bool
    # stability
    c: float
    scan_samples: int

    # --- conversion to domain objects -----------------------------------

    def grid(self):
        dx = self.dx_angstrom * ANGSTROM
        if self.dims == 1:
            return GridSpec(dims=1, nx=self.nx, dx=dx)
        return GridSpec(dims=2, nx=self.nx, dx=dx, ny=self.ny, dy=dx)

    def physics(self):
        return PhysicalParams(mass=self.mass_kg, hbar=self.hbar)

    def scheme(self):
        order = StencilOrder.SECOND_ORDER if self.stencil_order == 2 else StencilOrder.FOURTH_ORDER
        return SchemeConfig.from_mu(self.N, order, self.mu, self.physics(), self.grid())

    def packet(self):
        return GaussianPacketSpec(sigma=self.sigma_angstrom * ANGSTROM,
                                  wavelength=self.lambda_angstrom * ANGSTROM,
                                  center_j=self.center_j, center_k=self.center_k,
                                  normalize=self.normalize)

    def barrier(self):
        """BarrierSpec, or None for free space."""
        if self.height_ev is None:
            return None
        return BarrierSpec(j_min=self.j_min, k_min=self.k_min,
                           height=self.height_ev * EV)

    # --- serialization ---------------------------------------------------

    def to_document(self):
        doc = {
            "grid": {"dims": self.dims, "nx": self.nx, "dx_angstrom": self.dx_angstrom},
            "physics": {"mass_kg": self.mass_kg, "hbar": self.hbar},
            "scheme": {"N": self.N, "stencil_order": self.stencil_order, "mu": self.mu},
            "init": {"sigma_angstrom": self.sigma_angstrom,
                     "lambda_angstrom": self.lambda_angstrom,
                     "center_j": self.center_j, "normalize": self.normalize},
            "run": {"steps": self.steps, "snapshot_every": self.snapshot_every,
                    "out_dir": self.out_dir, "full_field_dumps": self.full_field_dumps},
            "stability": {"c": self.c, "scan_samples": self.scan_samples},
        }
        if self.dims == 2:
            doc["grid"]["ny"] = self.ny
            doc["init"]["center_k"] = self.center_k
        if self.height_ev is not None:
            doc["potential"] = {"type": "quadrant_barrier", "height_ev": self.height_ev,
                                "j_min": self.j_min}
            if self.dims == 2:
                doc["potential"]["k_min"] = self.k_min
        return doc

    def to_text(self):
        return json.dumps(self.to_document(), indent=2)


class _Section:
    """One config section with key bookkeeping and typed accessors."""

    def __init__(self, name, data):
        self.name = name
        self.data = data
        self.seen = set()

    def _get(self, key, required, default):
        self.seen.add(key)
        if key not in self.data:
            if required:
                raise ConfigurationError(f"missing required key {self.name}.{key}")
            return default
        return self.data[key]

    def number(self, key, required=True, default=None, minimum=None,
               exclusive_min=None, maximum=None):
        raw = self._get(key, required, default)
        if raw is None:
            return None
        if isinstance(raw, bool) or not isinstance(raw, (int, float)):
            raise ConfigurationError(f"{self.name}.{key} must be a number, got {raw!r}")
        val = float(raw)
        if minimum is not None and val < minimum:
            raise ConfigurationError(f"{self.name}.{key} must be >= {minimum}, got {val}")
        if exclusive_min is not None and val <= exclusive_min:
            raise ConfigurationError(f"{self.name}.{key} must be > {exclusive_min}, got {val}")
        if maximum is not None and val > maximum:
            raise ConfigurationError(f"{self.name}.{key} must be <= {maximum}, got {val}")
        return val

    def integer(self, key, required=True, default=None, minimum=None, choices=None):
        raw = self._get(key, required, default)
        if raw is None:
            return None
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise ConfigurationError(f"{self.name}.{key} must be an integer, got {raw!r}")
        if minimum is not None and raw < minimum:
            raise ConfigurationError(f"{self.name}.{key} must be >= {minimum}, got {raw}")
        if choices is not None and raw not in choices:
            raise ConfigurationError(
                f"{self.name}.{key} must be one of {sorted(choices)}, got {raw}")
        return raw

    def boolean(self, key, required=True, default=None):
        raw = self._get(key, required, default)
        if raw is None:
            return None
        if not isinstance(raw, bool):
            raise ConfigurationError(f"{self.name}.{key} must be a boolean, got {raw!r}")
        return raw

    def string(self, key, required=True, default=None, choices=None):
        raw = self._get(key, required, default)
        if raw is None:
            return None
        if not isinstance(raw, str):
            raise ConfigurationError(f"{self.name}.{key} must be a string, got {raw!r}")
        if choices is not None and raw not in choices:
            raise ConfigurationError(
                f"{self.name}.{key} must be one of {sorted(choices)}, got {raw!r}")
        return raw

    def reject_unknown(self):
        unknown = set(self.data) - self.seen
        if unknown:
            key = sorted(unknown)[0]
            raise ConfigurationError(f"unknown key {self.name}.{key}")


def parse_config(text):
    """Parse and validate a JSON config document into a RunConfig."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigurationError("config document must be a JSON object")

    known_sections = {"grid", "physics", "scheme", "init", "potential", "run", "stability"}
    unknown = set(doc) - known_sections
    if unknown:
        raise ConfigurationError(f"unknown section {sorted(unknown)[0]}")
    for name in ("grid", "scheme", "init", "run"):
        if name not in doc:
            raise ConfigurationError(f"missing required section {name}")
    for name, value in doc.items():
        if not isinstance(value, dict):
            raise ConfigurationError(f"section {name} must be a JSON object")

    grid = _Section("grid", doc["grid"])
    dims = grid.integer("dims", choices={1, 2})
    nx = grid.integer("nx", minimum=5)
    ny = grid.integer("ny", required=(dims == 2), minimum=5) if dims == 2 else None
    if dims == 1 and "ny" in doc["grid"]:
        raise ConfigurationError("grid.ny is not allowed in 1-D")
    dx_angstrom = grid.number("dx_angstrom", exclusive_min=0.0)
    grid.reject_unknown()

    physics = _Section("physics", doc.get("physics", {}))
    mass_kg = physics.number("mass_kg", required=False, default=ELECTRON_MASS,
                             exclusive_min=0.0)
    hbar = physics.number("hbar", required=False, default=HBAR, exclusive_min=0.0)
    physics.reject_unknown()

    scheme = _Section("scheme", doc["scheme"])
    n_trunc = scheme.integer("N", minimum=0)
    if n_trunc > 8:
        raise ConfigurationError(f"scheme.N must be <= 8, got {n_trunc}")
    stencil_order = scheme.integer("stencil_order", choices={2, 4})
    mu = scheme.number("mu", exclusive_min=0.0)
    scheme.reject_unknown()

    init = _Section("init", doc["init"])
    sigma_angstrom = init.number("sigma_angstrom", exclusive_min=0.0)
    lambda_angstrom = init.number("lambda_angstrom", exclusive_min=0.0)
    center_j = init.integer("center_j", minimum=1)
    center_k = init.integer("center_k", required=(dims == 2), minimum=1) \
        if dims == 2 else None
    if dims == 1 and "center_k" in doc["init"]:
        raise ConfigurationError("init.center_k is not allowed in 1-D")
    normalize = init.boolean("normalize", required=False, default=True)
    init.reject_unknown()
    if center_j > nx:
        raise ConfigurationError(f"init.center_j must be <= grid.nx, got {center_j}")
    if dims == 2 and center_k > ny:
        raise ConfigurationError(f"init.center_k must be <= grid.ny, got {center_k}")

    height_ev = j_min = k_min = None
    if "potential" in doc:
        pot = _Section("potential", doc["potential"])
        pot.string("type", choices={"quadrant_barrier"})
        height_ev = pot.number("height_ev", minimum=0.0)
        j_min = pot.integer("j_min", minimum=1)
        if dims == 2:
            k_min = pot.integer("k_min", minimum=1)
        elif "k_min" in doc["potential"]:
            raise ConfigurationError("potential.k_min is not allowed in 1-D")
        pot.reject_unknown()
        if j_min > nx:
            raise ConfigurationError(f"potential.j_min must be <= grid.nx, got {j_min}")
        if dims == 2 and k_min > ny:
            raise ConfigurationError(f"potential.k_min must be <= grid.ny, got {k_min}")

    run = _Section("run", doc["run"])
    steps = run.integer("steps", minimum=0)
    snapshot_every = run.integer("snapshot_every", minimum=0)
    out_dir = run.string("out_dir")
    full_field_dumps = run.boolean("full_field_dumps", required=False, default=False)
    run.reject_unknown()

    stability = _Section("stability", doc.get("stability", {}))
    c = stability.number("c", required=False, default=0.99, exclusive_min=0.0)
    if not c < 1.0:
        raise ConfigurationError(f"stability.c must be < 1, got {c}")
    scan_samples = stability.integer("scan_samples", required=False, default=256,
                                     minimum=64)
    stability.reject_unknown()

    cfg = RunConfig(dims=dims, nx=nx, ny=ny, dx_angstrom=dx_angstrom,
                    mass_kg=mass_kg, hbar=hbar,
                    N=n_trunc, stencil_order=stencil_order, mu=mu,
                    sigma_angstrom=sigma_angstrom, lambda_angstrom=lambda_angstrom,
                    center_j=center_j, center_k=center_k, normalize=normalize,
                    height_ev=height_ev, j_min=j_min, k_min=k_min,
                    steps=steps, snapshot_every=snapshot_every, out_dir=out_dir,
                    full_field_dumps=full_field_dumps,
                    c=c, scan_samples=scan_samples)
    # constructing the domain objects re-runs their invariants
    cfg.grid()
    cfg.scheme()
    return cfg
