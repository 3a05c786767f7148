#pragma once

#include "mdim/error.hpp"

#include <doctest.h>

#include <omp.h>

#include <functional>

// Runs `body` once per OpenMP team size, restoring the previous setting.
inline void for_thread_counts(const std::function<void(int)>& body)
{
    const int saved = omp_get_max_threads();
    for (int threads : {1, 2, 4, 7}) {
        omp_set_num_threads(threads);
        body(threads);
    }
    omp_set_num_threads(saved);
}

#define CHECK_ERROR_CODE(expr, expected_code)                                                                \
    do {                                                                                                     \
        bool thrown_ = false;                                                                                \
        try {                                                                                                \
            (void)(expr);                                                                                    \
        } catch (const mdim::Error& e) {                                                                     \
            thrown_ = true;                                                                                  \
            CHECK(e.code() == (expected_code));                                                              \
        }                                                                                                    \
        CHECK_MESSAGE(thrown_, "expected mdim::Error from " #expr);                                          \
    } while (false)
