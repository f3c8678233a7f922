/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BCS_FORMATS_HH
#define BCS_FORMATS_HH 1

#include <bcs/generators.hh>
#include <bcs/interface.hh>
#include <bcs/nfa.hh>
#include <bcs/sched_graph.hh>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bcs
{
    /**
     * Line-oriented text formats. Parse errors are InputErrors whose message
     * starts with "line L, column C:". Comments start with '#'.
     */

    [[nodiscard]] auto parse_smcp(std::string_view text) -> Smcp;
    [[nodiscard]] auto emit_smcp(const Smcp & s) -> std::string;

    /// Shuffle instance: alphabet, thread blocks (no memory), and a word: line.
    /// Without require_word a missing word: line leaves the word empty.
    [[nodiscard]] auto parse_sm(std::string_view text, bool require_word = true) -> SmInstance;
    [[nodiscard]] auto emit_sm(const SmInstance & s) -> std::string;

    /// A whitespace-separated list of symbol names.
    [[nodiscard]] auto parse_word(std::string_view text, const std::vector<std::string> & alphabet) -> Word;

    /// Automata for bounded intersection: alphabet, thread blocks, and a length: line.
    struct AutomataList
    {
        std::vector<std::string> alphabet;
        std::vector<Nfa> automata;
        std::size_t length = 0;
    };

    [[nodiscard]] auto parse_automata_list(std::string_view text) -> AutomataList;

    /// Scheduling graph: a nodes: line, then "i j w" arc lines. Repeated arcs add up.
    [[nodiscard]] auto parse_sched_graph(std::string_view text) -> SchedGraph;
    [[nodiscard]] auto emit_sched_graph(const SchedGraph & g) -> std::string;

    /// Contraction process: "n1 n2 -> n" lines.
    [[nodiscard]] auto parse_process(std::string_view text) -> ContractionProcess;
    [[nodiscard]] auto emit_process(const ContractionProcess & p) -> std::string;

    /// Carving decomposition as one S-expression, such as ((1 2) (3 4)).
    [[nodiscard]] auto parse_carving(std::string_view text) -> CarvingDecomposition;
    [[nodiscard]] auto emit_carving(const CarvingDecomposition & d) -> std::string;

    /// Witness words: space-separated sym@thread tokens, threads 1-based.
    [[nodiscard]] auto parse_witness(std::string_view text, const Smcp & s) -> TaggedWord;
    [[nodiscard]] auto emit_witness(const TaggedWord & u, const Smcp & s) -> std::string;

    /// Interface sequences as "(q,q') (q,q')" using memory state names.
    [[nodiscard]] auto emit_interface(const InterfaceSeq & sigma, const Nfa & memory) -> std::string;

    /// Undirected graph: a nodes: line, then "u v" edge lines.
    [[nodiscard]] auto parse_simple_graph(std::string_view text) -> SimpleGraph;
    [[nodiscard]] auto emit_simple_graph(const SimpleGraph & g) -> std::string;

    /// DIMACS CNF; every "p cnf" header starts another formula.
    [[nodiscard]] auto parse_dimacs(std::string_view text) -> std::vector<CnfFormula>;

    struct SetCoverInput
    {
        SetFamily family;
        std::size_t t = 0;
    };

    /// A t: line, an optional universe: line, then one set per line.
    [[nodiscard]] auto parse_set_cover(std::string_view text) -> SetCoverInput;

    /// A k: line, then "r1 c1 r2 c2" edge lines with 1-based coordinates.
    [[nodiscard]] auto parse_matrix_graph(std::string_view text) -> MatrixGraph;
}

#endif
