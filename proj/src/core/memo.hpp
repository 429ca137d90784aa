#ifndef YLAT_SRC_CORE_MEMO_HPP
#define YLAT_SRC_CORE_MEMO_HPP

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace ylat::detail {

// Process-wide memo shared by all threads.  Lookups copy the value out under
// a shared lock; inserts take the exclusive lock and keep the first value
// stored (all writers compute the same exact value).
template <class Key, class Value, class Hash = std::hash<Key>>
class SharedMemo {
public:
    std::optional<Value> find(const Key& key) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end())
            return std::nullopt;
        return it->second;
    }

    void insert(Key key, const Value& value) {
        std::unique_lock lock(mutex_);
        map_.try_emplace(std::move(key), value);
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

    void clear() {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, Value, Hash> map_;
};

}  // namespace ylat::detail

#endif  // YLAT_SRC_CORE_MEMO_HPP
