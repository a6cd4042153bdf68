#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "fflab/execution.hpp"

using namespace fflab;

TEST_CASE("for_each_index visits every index once in both modes") {
  for (Exec e : {Exec::serial, Exec::parallel}) {
    std::vector<int> hits(1000, 0);
    for_each_index(hits.size(), e, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
  }
}

TEST_CASE("the lowest failing index is rethrown") {
  for (Exec e : {Exec::serial, Exec::parallel}) {
    try {
      for_each_index(100, e, [](std::size_t i) {
        if (i == 37 || i == 80) throw std::runtime_error(std::to_string(i));
      });
      FAIL("expected a throw");
    } catch (const std::runtime_error& ex) {
      CHECK(std::string(ex.what()) == "37");
    }
  }
}

TEST_CASE("worker cap") {
  set_worker_cap(1);
  CHECK(worker_count() == 1);
  set_worker_cap(0);
  CHECK(worker_count() >= 1);
}
