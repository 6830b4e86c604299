"""Blocks of finite group algebras, Galois conjugation on blocks, Morita
Frobenius certificates and unipotent-block verdicts for groups of Lie type.

Report functions return the same dictionaries the ``mfblocks`` command-line
tool prints as JSON.
"""

import json
import os

_here = os.path.dirname(os.path.abspath(__file__))
if "MFBLOCKS_DATA" not in os.environ and os.path.isdir(os.path.join(_here, "data")):
    os.environ["MFBLOCKS_DATA"] = os.path.join(_here, "data")

from . import _core  # noqa: E402

__all__ = [
    "MfError",
    "chartable",
    "blocks",
    "orbits",
    "certify",
    "dominate",
    "snblocks",
    "anreport",
    "lietype",
    "suzukiree",
    "twist",
    "twisted",
    "e_of",
    "eval_phi",
    "nu_ell",
    "ell_core",
    "bar_core",
    "conjugate",
    "is_symmetric",
    "data_dir",
]


class MfError(Exception):
    """A failure reported by the native core.

    ``name`` is the stable error name (e.g. ``NotCoprime``), ``category`` one
    of domain, bound, schema, internal.
    """

    def __init__(self, payload):
        super().__init__(payload["message"])
        self.name = payload["error"]
        self.category = payload["category"]
        self.exit_code = payload["exit_code"]


def _call(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _core.NativeError as e:
        raise MfError(json.loads(str(e))) from None


def _report(fn, *args, **kwargs):
    return json.loads(_call(fn, *args, **kwargs))


def _as_json_text(obj):
    if isinstance(obj, (str, os.PathLike)) and os.path.exists(obj):
        with open(obj) as fh:
            return fh.read()
    if isinstance(obj, str):
        return obj
    return json.dumps(obj)


def data_dir():
    return _core.data_dir()


def chartable(source):
    return _report(_core.chartable, str(source))


def blocks(source, ell, idempotents=False, defect_groups=True, embedding=1):
    return _report(_core.blocks, str(source), ell, idempotents, defect_groups, embedding)


def orbits(source, ell, embedding=1):
    return _report(_core.orbits, str(source), ell, embedding)


def certify(source, ell):
    return _report(_core.certify, str(source), ell)


def dominate(source, ell):
    """Blocks of G against blocks of G/Z(G)."""
    return _report(_core.dominate, str(source), ell)


def snblocks(n, ell):
    return _report(_core.snblocks, n, ell)


def anreport(n, ell):
    return _report(_core.anreport, n, ell)


def lietype(type_name, ell, q):
    return _report(_core.lietype, type_name, ell, q)


def suzukiree(type_name, ell, field_size=None):
    return _report(_core.suzukiree, type_name, ell, field_size)


def twist(algebra, a=1):
    """``algebra`` is a path, a JSON string or a dict in the algebra format."""
    return _report(_core.twist, _as_json_text(algebra), a)


def twisted(cocycle):
    return _report(_core.twisted, _as_json_text(cocycle))


def e_of(ell, q):
    return _call(_core.e_of, ell, q)


def eval_phi(d, q):
    return int(_call(_core.eval_phi, d, q))


def nu_ell(n, ell):
    return _call(_core.nu_ell, n, ell)


def ell_core(partition, ell):
    return _call(_core.ell_core, list(partition), ell)


def bar_core(partition, ell):
    return _call(_core.bar_core, list(partition), ell)


def conjugate(partition):
    return _call(_core.conjugate, list(partition))


def is_symmetric(partition):
    return _call(_core.is_symmetric, list(partition))
