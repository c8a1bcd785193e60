#include "dualchoice/dataset.hpp"

// The 18 Kahneman-Tversky binary choices with the observed aggregate choice
// fractions, kept as decimal text and parsed through the regular JSON path
// so golden tests do not depend on float literal parsing in the compiler.

namespace dualchoice {

namespace {

constexpr const char* kKahnemanTverskyJson = R"json([
{"label":"KT-1","lotteries":[
  {"label":"L1","outcomes":[[2.5,0.33],[2.4,0.66],[0,0.01]]},
  {"label":"L2","outcomes":[[2.4,1]]}],
 "sessions":[[0.18,0.82]]},
{"label":"KT-2","lotteries":[
  {"label":"L1","outcomes":[[2.5,0.33],[0,0.67]]},
  {"label":"L2","outcomes":[[2.4,0.34],[0,0.66]]}],
 "sessions":[[0.83,0.17]]},
{"label":"KT-3","lotteries":[
  {"label":"L1","outcomes":[[4,0.8],[0,0.2]]},
  {"label":"L2","outcomes":[[3,1]]}],
 "sessions":[[0.20,0.80]]},
{"label":"KT-4","lotteries":[
  {"label":"L1","outcomes":[[4,0.20],[0,0.80]]},
  {"label":"L2","outcomes":[[3,0.25],[0,0.75]]}],
 "sessions":[[0.65,0.35]]},
{"label":"KT-5","lotteries":[
  {"label":"L1","outcomes":[[6,0.45],[0,0.55]]},
  {"label":"L2","outcomes":[[3,0.9],[0,0.10]]}],
 "sessions":[[0.14,0.86]]},
{"label":"KT-6","lotteries":[
  {"label":"L1","outcomes":[[6,0.001],[0,0.999]]},
  {"label":"L2","outcomes":[[3,0.002],[0,0.998]]}],
 "sessions":[[0.73,0.27]]},
{"label":"KT-7","lotteries":[
  {"label":"L1","outcomes":[[6,0.25],[0,0.75]]},
  {"label":"L2","outcomes":[[4,0.25],[2,0.25],[0,0.5]]}],
 "sessions":[[0.18,0.82]]},
{"label":"KT-8","lotteries":[
  {"label":"L1","outcomes":[[5,0.001],[0,0.999]]},
  {"label":"L2","outcomes":[[0.005,1]]}],
 "sessions":[[0.72,0.28]]},
{"label":"KT-9","lotteries":[
  {"label":"L1","outcomes":[[10,0.5],[0,0.5]]},
  {"label":"L2","outcomes":[[5,1]]}],
 "sessions":[[0.16,0.84]]},
{"label":"KT-10","lotteries":[
  {"label":"L1","outcomes":[[2,0.5],[1,0.5]]},
  {"label":"L2","outcomes":[[1.5,1]]}],
 "sessions":[[0.20,0.80]]},
{"label":"KT-11","lotteries":[
  {"label":"L1","outcomes":[[-4,0.8],[0,0.2]]},
  {"label":"L2","outcomes":[[-3,1]]}],
 "sessions":[[0.92,0.08]]},
{"label":"KT-12","lotteries":[
  {"label":"L1","outcomes":[[-4,0.2],[0,0.8]]},
  {"label":"L2","outcomes":[[-3,0.25],[0,0.75]]}],
 "sessions":[[0.42,0.58]]},
{"label":"KT-13","lotteries":[
  {"label":"L1","outcomes":[[-3,0.9],[0,0.1]]},
  {"label":"L2","outcomes":[[-6,0.45],[0,0.55]]}],
 "sessions":[[0.08,0.92]]},
{"label":"KT-14","lotteries":[
  {"label":"L1","outcomes":[[-3,0.002],[0,0.998]]},
  {"label":"L2","outcomes":[[-6,0.001],[0,0.999]]}],
 "sessions":[[0.70,0.30]]},
{"label":"KT-15","lotteries":[
  {"label":"L1","outcomes":[[-1,0.5],[0,0.5]]},
  {"label":"L2","outcomes":[[-0.5,1]]}],
 "sessions":[[0.69,0.31]]},
{"label":"KT-16","lotteries":[
  {"label":"L1","outcomes":[[-6,0.25],[0,0.75]]},
  {"label":"L2","outcomes":[[-4,0.25],[-2,0.25],[0,0.5]]}],
 "sessions":[[0.70,0.30]]},
{"label":"KT-17","lotteries":[
  {"label":"L1","outcomes":[[-5,0.001],[0,0.999]]},
  {"label":"L2","outcomes":[[-0.005,1]]}],
 "sessions":[[0.17,0.83]]},
{"label":"KT-18","lotteries":[
  {"label":"L1","outcomes":[[-10,0.5],[0,0.5]]},
  {"label":"L2","outcomes":[[-5,1]]}],
 "sessions":[[0.69,0.31]]}
])json";

} // namespace

std::vector<EmpiricalRecord> kt_suite() {
    static const std::vector<EmpiricalRecord> suite = [] {
        std::vector<EmpiricalRecord> records = parse_records_json(kKahnemanTverskyJson);
        for (EmpiricalRecord& record : records) {
            record.source_tag = "kahneman-tversky-1979";
        }
        return records;
    }();
    return suite;
}

} // namespace dualchoice
