/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <bcs/global_solver.hh>
#include <bcs/subset_convolution.hh>

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>

using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace bcs
{
    namespace
    {
        // one accepting path of b on w, as the list of visited states
        auto accepting_path(const Nfa & b, const Word & w) -> vector<State>
        {
            const size_t n = b.num_states();
            constexpr State none = std::numeric_limits<State>::max();
            vector<vector<State>> parent(w.size() + 1, vector<State>(n, none));
            parent[0][b.initial()] = b.initial();
            for (size_t i = 0 ; i < w.size() ; ++i)
                for (State p = 0 ; p < n ; ++p)
                    if (parent[i][p] != none)
                        for (auto p2 : b.successors(p, w[i]))
                            if (parent[i + 1][p2] == none)
                                parent[i + 1][p2] = p;

            if (parent[w.size()][b.final()] == none)
                throw InternalError("assigned subsequence is not accepted by its interface automaton");

            vector<State> path(w.size() + 1);
            path[w.size()] = b.final();
            for (size_t i = w.size() ; i > 0 ; --i)
                path[i - 1] = parent[i][path[i]];
            return path;
        }
    }

    auto reconstruct_witness(const Smcp & s, const InterfaceSeq & sigma, const vector<size_t> & assignment) -> TaggedWord
    {
        if (assignment.size() != sigma.size())
            throw InternalError("assignment does not cover the interface sequence");
        if (! is_valid(sigma, s.memory))
            throw InternalError("interface sequence to fill is not valid");

        const size_t mq = s.memory.num_states();
        vector<Word> words(sigma.size());
        for (size_t i = 0 ; i < s.num_threads() ; ++i) {
            vector<size_t> positions;
            Word sub;
            for (size_t x = 0 ; x < sigma.size() ; ++x)
                if (assignment[x] == i) {
                    positions.push_back(x);
                    sub.push_back(pair_symbol(sigma[x], mq));
                }
            if (positions.empty())
                continue;

            auto b = interface_automaton(s.memory, s.threads[i]);
            auto path = accepting_path(b, sub);
            for (size_t j = 0 ; j < positions.size() ; ++j) {
                auto & pr = sigma[positions[j]];
                auto seg = segment_nonempty(s.memory, pr.first, pr.second, s.threads[i], path[j], path[j + 1]);
                if (! seg)
                    throw InternalError("interface automaton edge has no segment word");
                words[positions[j]] = *seg;
            }
        }
        for (auto a : assignment)
            if (a >= s.num_threads())
                throw InternalError("assignment names an undeclared thread");

        TaggedWord u;
        for (size_t x = 0 ; x < sigma.size() ; ++x)
            for (auto sym : words[x])
                u.push_back({ sym, assignment[x] });
        return u;
    }

    auto solve_bcs(const Smcp & s, size_t cs, const BcsOptions & options) -> BcsResult
    {
        s.validate();
        const auto & m = s.memory;
        BcsResult result;

        if (m.initial() == m.final()) {
            result.yes = true;
            return result;
        }

        const size_t mq = m.num_states();
        vector<Nfa> bs;
        PairFilter filter(mq * mq, 0);
        for (auto & a : s.threads) {
            bs.push_back(interface_automaton(m, a));
            // a position filled by an empty segment is a (q, q) pair whose
            // owner stays put; dropping it leaves a shorter sequence that is
            // enumerated too, so only nonempty-realisable pairs are needed
            auto plus = interface_automaton(m, a, true);
            for (auto & tr : plus.transitions())
                filter[tr.symbol] = 1;
        }

        const size_t batch_size = 256;
        vector<InterfaceSeq> batch;
        bool found = false;

        auto run_batch = [&] () {
            result.checks += batch.size();
            vector<char> hits(batch.size(), 0);
            unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, unsigned(batch.size())));
            if (jobs == 1) {
                for (size_t x = 0 ; x < batch.size() ; ++x)
                    if (shuffle_membership(bs, pair_word(batch[x], mq))) {
                        hits[x] = 1;
                        break;
                    }
            }
            else {
                std::atomic<size_t> next{ 0 };
                std::atomic<size_t> first_hit{ batch.size() };
                std::exception_ptr failure;
                std::atomic<bool> failed{ false };
                {
                    vector<std::jthread> workers;
                    for (unsigned j = 0 ; j < jobs ; ++j)
                        workers.emplace_back([&] {
                            try {
                                for (size_t x ; (x = next++) < batch.size() && x < first_hit.load() ; )
                                    if (shuffle_membership(bs, pair_word(batch[x], mq))) {
                                        hits[x] = 1;
                                        size_t cur = first_hit.load();
                                        while (x < cur && ! first_hit.compare_exchange_weak(cur, x))
                                            ;
                                    }
                            }
                            catch (...) {
                                if (! failed.exchange(true))
                                    failure = std::current_exception();
                            }
                        });
                }
                if (failed)
                    std::rethrow_exception(failure);
            }

            auto hit = std::find(hits.begin(), hits.end(), 1);
            if (hit != hits.end()) {
                auto & sigma = batch[size_t(hit - hits.begin())];
                auto certificate = shuffle_certificate(bs, pair_word(sigma, mq));
                if (! certificate)
                    throw InternalError("shuffle membership and its certificate disagree");
                result.yes = true;
                result.sigma = sigma;
                result.assignment = *certificate;
                found = true;
            }
            batch.clear();
        };

        enumerate_valid(m, cs + 1, [&] (const InterfaceSeq & sigma) -> bool {
                if (result.checks + batch.size() >= options.cap)
                    throw ResourceError("global solver exceeded the cap of " + to_string(options.cap)
                            + " shuffle-membership checks");
                batch.push_back(sigma);
                if (batch.size() == batch_size)
                    run_batch();
                return ! found;
            }, &filter);

        if (! found && ! batch.empty())
            run_batch();

        if (found)
            result.witness = reconstruct_witness(s, result.sigma, result.assignment);
        return result;
    }
}
