/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BCS_CLI_HH
#define BCS_CLI_HH 1

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bcs
{
    enum class ExitStatus : int
    {
        yes = 0,
        no = 1,
        usage = 2,
        resource = 3,
        internal = 4
    };

    /// Runs one command line (args[0] is the program name) and returns the exit status.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

    struct ScalingPoint
    {
        std::size_t k;
        double median_seconds;
    };

    /**
     * Median shuffle-membership time for each word length in [k_min, k_max],
     * over reps random instances per length drawn from seed.
     */
    [[nodiscard]] auto shuffle_scaling(std::uint64_t seed, std::size_t k_min, std::size_t k_max, std::size_t reps)
        -> std::vector<ScalingPoint>;

    /**
     * Median solve_bcs time for each bound in [0, cs_max] on a fixed program
     * with a two-state memory and no computation, so that every valid
     * interface sequence gets tried.
     */
    [[nodiscard]] auto bcs_scaling(std::size_t cs_max, std::size_t reps)
        -> std::vector<ScalingPoint>;
}

#endif
