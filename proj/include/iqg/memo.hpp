#pragma once

#include <future>
#include <map>
#include <memory>
#include <mutex>

namespace iqg {

/** Compute-once table.  The first caller for a key runs the computation,
 *  concurrent callers for the same key wait for that one result, and a
 *  thrown computation stays associated with its key.  Values are shared
 *  immutable snapshots, so readers never see a partial entry. */
template <class Key, class Value>
class MemoTable {
    mutable std::mutex mu_;
    mutable std::map<Key, std::shared_future<std::shared_ptr<const Value>>> slots_;

public:
    template <class Fn>
    std::shared_ptr<const Value> get(const Key& key, Fn&& compute) const {
        std::promise<std::shared_ptr<const Value>> mine;
        std::shared_future<std::shared_ptr<const Value>> fut;
        bool owner = false;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = slots_.find(key);
            if (it == slots_.end()) {
                fut = mine.get_future().share();
                slots_.emplace(key, fut);
                owner = true;
            } else {
                fut = it->second;
            }
        }
        if (owner) {
            try {
                mine.set_value(std::make_shared<const Value>(compute()));
            } catch (...) {
                mine.set_exception(std::current_exception());
            }
        }
        return fut.get();
    }
};

}  // namespace iqg
