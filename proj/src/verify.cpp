#include "mdecc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <thread>
#include <unordered_map>

namespace mdecc {

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : failures)
        fails.push_back({{"kind", f.kind}, {"pattern", f.pattern}, {"detail", f.detail}});
    return {{"code", code_name},
            {"class_size", class_size},
            {"patterns_tested", patterns_tested},
            {"injective", injective},
            {"collisions", collisions},
            {"failures", fails},
            {"pass", ok()},
            {"redundancy", redundancy.to_json()},
            {"wall_seconds", wall_seconds},
            {"jobs", jobs}};
}

VerifyReport verify_code(const BlockCode& code, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.code_name = code.name();
    rep.jobs = std::max(1, jobs);

    std::vector<ErrorPattern> klass = enumerate_patterns(code.dims(), code.shape());
    rep.class_size = (long long)klass.size();
    rep.patterns_tested = rep.class_size;

    std::vector<BitVec> syndromes(klass.size());
    for (size_t i = 0; i < klass.size(); ++i) syndromes[i] = code.syndrome_of(klass[i]);

    rep.injective = true;
    std::unordered_map<BitVec, size_t, BitVecHash> seen;
    seen.reserve(klass.size() + 1);
    for (size_t i = 0; i < klass.size(); ++i) {
        if (syndromes[i].none()) {
            ++rep.collisions;
            rep.injective = false;
            rep.failures.push_back({"injectivity", klass[i].str(), "syndrome is zero (collides with no-error)"});
            continue;
        }
        auto [it, fresh] = seen.emplace(syndromes[i], i);
        if (!fresh) {
            ++rep.collisions;
            rep.injective = false;
            rep.failures.push_back({"injectivity", klass[i].str(),
                                    "same syndrome as " + klass[it->second].str()});
        }
    }

    std::vector<std::vector<VerifyFailure>> chunk_failures(rep.jobs);
    auto worker = [&](int w) {
        for (size_t i = w; i < klass.size(); i += rep.jobs) {
            DecodeResult r = code.decode(syndromes[i]);
            if (r.status != DecodeStatus::Corrected)
                chunk_failures[w].push_back({"roundtrip", klass[i].str(),
                                             "decode returned " + to_string(r.status)});
            else if (r.pattern != klass[i])
                chunk_failures[w].push_back(
                    {"roundtrip", klass[i].str(), "decoded " + r.pattern.str()});
        }
    };
    if (rep.jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < rep.jobs; ++w) threads.emplace_back(worker, w);
        for (auto& t : threads) t.join();
    }
    for (auto& cf : chunk_failures)
        rep.failures.insert(rep.failures.end(), cf.begin(), cf.end());

    rep.redundancy = redundancy_report(code);
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace mdecc
