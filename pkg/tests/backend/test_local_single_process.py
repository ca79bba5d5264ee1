import unittest

from chaosqueeze.backend.local_single_process import LocalSingleProcessBackend
from tests.backend.mixins import BackendEngineTestCase


class TestLocalSingleProcessBackend(unittest.TestCase, BackendEngineTestCase):
    def setUp(self):
        self._backend = LocalSingleProcessBackend()

    def n_workers(self) -> int:
        return 1

    def backend(self) -> LocalSingleProcessBackend:
        return self._backend

    def test_runs_at_submission(self):
        calls = []

        with self.backend().session() as session:
            future = session.submit(calls.append, 42)

            self.assertListEqual(calls, [42])
            self.assertTrue(future.done())


if __name__ == "__main__":
    unittest.main()
