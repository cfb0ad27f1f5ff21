# Copyright (C) 2026 treecount developers.
# Use of this source code is governed by MIT license that can be
# found in the LICENSE file.

"""
pytest config file (file name has special meaning), executed before
running tests.

Every test is wrapped by a fixture checking that it leaves no threads,
child processes or file descriptors behind (the parallel verifiers
spawn both).
"""

import atexit
import os
import threading
import warnings

import psutil
import pytest
from hypothesis import HealthCheck
from hypothesis import settings

from treecount import log

from . import POSIX
from . import ROOT_DIR
from . import TESTFN_PREFIX
from . import safe_rmpath


# set it to True to raise an exception instead of warning
FAIL = False
this_proc = psutil.Process()

# the leak check wraps a whole test, every hypothesis example included
settings.register_profile(
    "treecount",
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("treecount")


def collect_resources():
    res = {}
    res["threads"] = set(threading.enumerate())
    res["children"] = {p.pid for p in this_proc.children()}
    if POSIX:
        res["num_fds"] = this_proc.num_fds()
    return res


def warn(msg):
    if FAIL:
        raise RuntimeError(msg)
    warnings.warn(msg, ResourceWarning, stacklevel=3)


def assert_closed_resources(setup_ctx, request):
    if request.session.testsfailed:
        return  # no need to warn if test already failed

    before = setup_ctx.copy()
    after = collect_resources()
    for key, value in before.items():
        if key.startswith("_"):
            continue
        msg = (
            f"{setup_ctx['_origin']!r} left some unclosed {key!r} resources"
            " behind: "
        )
        if isinstance(value, set):
            extra = after[key] - value
            if extra:
                warn(msg + repr(extra))
        elif after[key] > value:
            warn(msg + f"before={value!r}, after={after[key]!r}")


def assert_no_handler():
    # tests calling config_logging() must remove what they installed
    if log._handler is not None and log._handler in log.logger.handlers:
        warn("treecount logging handler left installed")


# ---


def setup_method(origin):
    ctx = collect_resources()
    ctx["_origin"] = origin
    return ctx


def teardown_method(setup_ctx, request):
    assert_closed_resources(setup_ctx, request)
    assert_no_handler()


@pytest.fixture(autouse=True, scope="function")
def for_each_test_method(request):
    ctx = setup_method(request.node.nodeid)
    request.addfinalizer(lambda: teardown_method(ctx, request))


@atexit.register
def on_exit():
    for name in os.listdir(ROOT_DIR):
        if name.startswith(TESTFN_PREFIX):
            safe_rmpath(os.path.join(ROOT_DIR, name))
