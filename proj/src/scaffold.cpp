#include "stpaw/scaffold.hpp"

#include <sstream>

namespace stpaw {

// The text is already in canonical form (serialize of its parse is the
// same bytes), so a fresh project formats cleanly from the start.
std::string scaffold_source(std::string_view name) {
  std::ostringstream out;
  out << "project \"" << name << "\"\n";
  out << "\n";
  out << "loss L1 \"Loss of or harm to people, property, or mission.\"\n";
  out << "\n";
  out << "hazard H1 \"The system enters a state that can lead to the loss.\" "
         "leads_to [L1]\n";
  out << "\n";
  out << "element ACT role Actuator in managed name \"Actuator\"\n";
  out << "element ANA role Analyzer in managing name \"Analyzer\"\n";
  out << "element CTRL role Controller in managed name \"Controller\"\n";
  out << "element EFF role Effector in managing name \"Effector\"\n";
  out << "element EXEC role Executor in managing name \"Executor\"\n";
  out << "element KNOW role Knowledge in managing name \"Knowledge\" models "
         "{managed_system, environment, goals, working}\n";
  out << "element MON role Monitor in managing name \"Monitor\"\n";
  out << "element PLAN role Planner in managing name \"Planner\"\n";
  out << "element PRB role Probe in managing name \"Probe\"\n";
  out << "element PROC role Process in managed name \"Process\"\n";
  out << "element SENS role Sensor in managed name \"Sensor\"\n";
  out << "\n";
  out << "link AA1 kind AdaptationAction from EXEC to EFF label \"apply "
         "configuration change\"\n";
  out << "link CA1 kind ControlAction from CTRL to ACT label \"control "
         "command\"\n";
  out << "link EC1 kind EffectorChange from EFF to CTRL label \"update "
         "controller parameters\"\n";
  out << "link FB1 kind Feedback from SENS to CTRL label \"sensor reading\"\n";
  out << "link KR1 kind KnowledgeRead from KNOW to ANA label \"read models\"\n";
  out << "link KU1 kind KnowledgeUpdate from MON to KNOW label \"update "
         "monitored data\"\n";
  out << "link MV1 kind MonitoredValue from PROC to PRB label \"process "
         "state\"\n";
  out << "link PD1 kind ProbeData from PRB to MON label \"probe readings\"\n";
  out << "link PL1 kind Plan from PLAN to EXEC label \"adaptation plan\"\n";
  out << "link TR1 kind Trigger from MON to ANA label \"analysis trigger\"\n";
  out << "\n";
  out << "adaptation AD1 affects_safety false option_set predetermined "
         "assurance unconditional monotonic false declared_type 0\n";
  return out.str();
}

}  // namespace stpaw
