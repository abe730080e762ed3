#include "cpsva/model.hpp"

namespace cpsva {

// Kept byte-identical with fixtures/fcs.model (asserted in tests).
const std::string& example_fcs_text() {
    static const std::string text = R"FCS(# Flight control system example model.
# Part properties follow the seven-category taxonomic scheme; connections
# carry the interaction kind and protocol labels.
name = Flight Control System

[component] primary_processor
display_name = Primary Application Processor
cyber = true
function_note = Runs the autopilot and fuses all sensor inputs into actuation commands
os = NuttX RTOS
device = Pixhawk PX4 FMU
hardware = STM32F4 microcontroller
firmware = NuttX peripheral drivers
software = PX4 flight stack
communication = I2C, UART
entry_points =

[component] gps
display_name = NMEA GPS
cyber = true
function_note = Provides location data for navigation
os = Bare Metal
device = Adafruit Ultimate GPS
hardware = Mediatek MTK 3339 chipset
firmware = Communication protocol drivers
software =
communication = I2C, RS232, UART, RF
entry_points = RF

[component] radio
display_name = Radio Module
cyber = true
function_note = Carries command and telemetry traffic to the ground control station
os = Bare Metal
device = XBee
hardware = EM357 transceiver
firmware = ZigBee IEEE 802.15.4 protocol drivers
software =
communication = UART, RF, ZigBee IEEE 802.15.4
entry_points = RF

[component] safety_switch
display_name = Safety Switch Processor
cyber = true
function_note = Arms the outputs and drives the servos
os = Bare Metal
device = PX4IO safety coprocessor
hardware = STM32F1 coprocessor
firmware =
software =
communication = UART, PWM
entry_points =

[component] magnetometer
display_name = Magnetometer
cyber = true
function_note = Supplies heading measurements
os = Bare Metal
device = HMC5883L compass
hardware =
firmware =
software =
communication = I2C
entry_points =

[component] gcs_link
display_name = Ground Control Link
cyber = true
function_note = Operator side of the command and telemetry channel
os =
device = GCS telemetry transmitter
hardware =
firmware =
software =
communication = RF, ZigBee IEEE 802.15.4
entry_points = RF

[component] engine_sensor
display_name = Engine Sensor
cyber = false
function_note = Reports engine state to the autopilot

[component] power_system
display_name = Power System
cyber = false
function_note = Distributes electrical power

[component] servos
display_name = Servos
cyber = false
function_note = Physical pull on throttle and aileron

[connection] gps -> primary_processor
kind = digital
protocols = I2C

[connection] radio -> primary_processor
kind = digital
protocols = UART

[connection] gcs_link -> radio
kind = digital
protocols = ZigBee IEEE 802.15.4

[connection] magnetometer -> primary_processor
kind = digital
protocols = I2C

[connection] engine_sensor -> primary_processor
kind = analog

[connection] primary_processor -> safety_switch
kind = digital
protocols = UART

[connection] safety_switch -> servos
kind = digital
protocols = PWM

[connection] power_system -> primary_processor
kind = physical

[connection] power_system -> servos
kind = physical
)FCS";
    return text;
}

}  // namespace cpsva
