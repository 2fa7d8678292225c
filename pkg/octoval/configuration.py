class bcolors:
    OKGREEN = '\033[92m'
    WARNING = '\033[93m'
    FAIL = '\033[91m'
    ENDC = '\033[0m'
    BOLD = '\033[1m'


class Configuration:
    """
    The static class that maintain the user's input option
    """
    _verbose_flag = 'warning'       # if user set -v flag, the debugging info would be printed
    # the start time of the run, used to name the default output files
    _start_time = ''
    # where the default result files are written, see clean.sh
    _output_dir = './output'
    # the AGM stops once the half-difference falls below tolerance * a
    _tolerance = 1e-12
    # the grid step of the error sweep
    _step = 0.25
    # how many processes evaluate the sweep cells, 1 means sequential
    _workers = 1
    # how many polar angles the radial deviation is sampled on
    _samples = 4096
    # the backend SMT solver of the sine-bound proofs
    _solver = 'z3'

    @staticmethod
    def reset():
        Configuration._verbose_flag = 'warning'
        Configuration._start_time = ''
        Configuration._output_dir = './output'
        Configuration._tolerance = 1e-12
        Configuration._step = 0.25
        Configuration._workers = 1
        Configuration._samples = 4096
        Configuration._solver = 'z3'

    @staticmethod
    def set_verbose_flag(verbose_flag):
        Configuration._verbose_flag = verbose_flag

    @staticmethod
    def get_verbose_flag():
        return Configuration._verbose_flag

    @staticmethod
    def get_start_time():
        return Configuration._start_time

    @staticmethod
    def set_start_time(start_time):
        Configuration._start_time = start_time

    @staticmethod
    def get_output_dir():
        return Configuration._output_dir

    @staticmethod
    def set_output_dir(output_dir):
        Configuration._output_dir = output_dir

    @staticmethod
    def get_tolerance():
        return Configuration._tolerance

    @staticmethod
    def set_tolerance(tolerance):
        Configuration._tolerance = tolerance

    @staticmethod
    def get_step():
        return Configuration._step

    @staticmethod
    def set_step(step):
        Configuration._step = step

    @staticmethod
    def get_workers():
        return Configuration._workers

    @staticmethod
    def set_workers(workers):
        """
        The sweep is deterministic regardless of workers,
        so a non-positive value simply falls back to sequential evaluation
        """
        Configuration._workers = max(1, int(workers))

    @staticmethod
    def get_samples():
        return Configuration._samples

    @staticmethod
    def set_samples(samples):
        Configuration._samples = samples

    @staticmethod
    def set_solver(solver):
        Configuration._solver = solver

    @staticmethod
    def get_solver():
        return Configuration._solver

    @staticmethod
    def default_result_path(command, extension):
        """
        The path of a result file when the user gives no -o,
        like ./output/result/sweep_2024-07-01_07-50-36_191000.csv
        """
        return f"{Configuration._output_dir}/result/{command}_{Configuration._start_time}.{extension}"
