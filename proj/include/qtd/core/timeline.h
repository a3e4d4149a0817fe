// Copyright 2026 The qtransduce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QTD_CORE_TIMELINE_H_
#define QTD_CORE_TIMELINE_H_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtd/core/sim_time.h"

namespace qtd {

/// Index of a component registered on a timeline.
struct ComponentId {
    std::uint32_t index = 0;
    constexpr auto operator<=>(const ComponentId &) const = default;
};

using EventId = std::uint64_t;

/// Thrown when an event would fire before the current clock reading.
class CausalityError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

template <typename Payload>
struct Event {
    SimTime fire_time;
    EventId sequence = 0;
    ComponentId target;
    Payload payload;
};

struct RunStats {
    std::uint64_t events_processed = 0;
    SimTime final_time;
};

/// Single-threaded discrete-event queue.
///
/// Events are delivered in (fire_time, sequence) order, where sequence is the
/// scheduling order. Components are registered first (to obtain ids for
/// wiring) and receive their handler afterwards.
template <typename Payload>
class Timeline {
   public:
    using EventType = Event<Payload>;
    using Handler = std::function<void(const EventType &)>;

    Timeline() = default;
    Timeline(const Timeline &) = delete;
    Timeline &operator=(const Timeline &) = delete;

    ComponentId add_component(std::string name, Handler handler = {}) {
        ComponentId id{static_cast<std::uint32_t>(components_.size())};
        components_.push_back({std::move(name), std::move(handler)});
        return id;
    }

    void set_handler(ComponentId id, Handler handler) {
        entry(id).handler = std::move(handler);
    }

    const std::string &name(ComponentId id) const {
        return entry(id).name;
    }

    std::size_t component_count() const {
        return components_.size();
    }

    SimTime now() const {
        return now_;
    }

    std::size_t pending() const {
        return queue_.size();
    }

    EventId schedule(SimTime fire_time, ComponentId target, Payload payload) {
        if (fire_time < now_) {
            throw CausalityError("event scheduled at " + std::to_string(fire_time.ps()) +
                                 "ps but the clock reads " + std::to_string(now_.ps()) + "ps");
        }
        entry(target);
        EventId id = next_sequence_++;
        queue_.push_back(EventType{fire_time, id, target, std::move(payload)});
        std::push_heap(queue_.begin(), queue_.end(), Later{});
        return id;
    }

    /// Processes every queued event with fire_time <= t_end, including the
    /// ones scheduled by handlers along the way. The clock ends at t_end
    /// (or stays put if it is already past it).
    RunStats run_until(SimTime t_end) {
        RunStats stats;
        while (!queue_.empty() && queue_.front().fire_time <= t_end) {
            std::pop_heap(queue_.begin(), queue_.end(), Later{});
            EventType event = std::move(queue_.back());
            queue_.pop_back();
            now_ = event.fire_time;
            const Handler &handler = components_[event.target.index].handler;
            if (!handler) {
                throw std::logic_error("component '" + components_[event.target.index].name +
                                       "' received an event but has no handler");
            }
            handler(event);
            ++stats.events_processed;
        }
        now_ = std::max(now_, t_end);
        stats.final_time = now_;
        return stats;
    }

   private:
    struct Entry {
        std::string name;
        Handler handler;
    };

    struct Later {
        bool operator()(const EventType &a, const EventType &b) const {
            if (a.fire_time != b.fire_time) {
                return a.fire_time > b.fire_time;
            }
            return a.sequence > b.sequence;
        }
    };

    Entry &entry(ComponentId id) {
        if (id.index >= components_.size()) {
            throw std::out_of_range("unknown component id " + std::to_string(id.index));
        }
        return components_[id.index];
    }
    const Entry &entry(ComponentId id) const {
        if (id.index >= components_.size()) {
            throw std::out_of_range("unknown component id " + std::to_string(id.index));
        }
        return components_[id.index];
    }

    std::vector<Entry> components_;
    std::vector<EventType> queue_;
    EventId next_sequence_ = 0;
    SimTime now_;
};

}  // namespace qtd

#endif  // QTD_CORE_TIMELINE_H_
