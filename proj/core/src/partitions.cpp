#include "hwlie/partitions.hpp"

#include <map>

#include "hwlie/errors.hpp"

namespace hwlie {

namespace {

void emit(long long n, long long max_part, std::vector<long long>& prefix,
          std::vector<std::vector<long long>>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (long long first = std::min(n, max_part); first >= 1; --first) {
        prefix.push_back(first);
        emit(n - first, first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<std::vector<long long>> partitions(long long n) {
    if (n < 0) throw DomainError("partitions of a negative integer");
    std::vector<std::vector<long long>> out;
    std::vector<long long> prefix;
    emit(n, n == 0 ? 1 : n, prefix, out);
    return out;
}

long long partition_count(long long n) {
    if (n < 0) return 0;
    // p(n, k) = partitions of n into parts <= k; memo local to the call.
    std::map<std::pair<long long, long long>, long long> memo;
    auto p = [&memo](auto&& self, long long m, long long k) -> long long {
        if (m == 0) return 1;
        if (m < 0 || k <= 0) return 0;
        auto key = std::make_pair(m, k);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        long long v = self(self, m - k, k) + self(self, m, k - 1);
        memo[key] = v;
        return v;
    };
    return p(p, n, n);
}

} // namespace hwlie
