import io

from disc_lqg.app.wiring.logging import StderrLogger


def test_stderr_logger_prefixes_levels() -> None:
    stream = io.StringIO()
    logger = StderrLogger(stream=stream)

    logger.info("design: non-discounted; Thm 4")
    logger.warn("check stationarity_gradient: FAILED")
    logger.error("boom")

    assert stream.getvalue().splitlines() == [
        "[INFO] design: non-discounted; Thm 4",
        "[WARN] check stationarity_gradient: FAILED",
        "[ERROR] boom",
    ]
