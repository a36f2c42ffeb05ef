package org.example.io;

public class LineWriter {
    public void writeLines(String path, List<String> lines) {
        try {
            BufferedWriter writer = new BufferedWriter(new FileWriter(path));
            for (String line : lines) {
                writer.write(line.trim());
                writer.newLine();
            }
            writer.flush();
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
    }

    public void writeKeys(String file, List<String> lines) {
        try {
            BufferedWriter writer = new BufferedWriter(new FileWriter(file));
            for (String line : lines) {
                writer.write(line.trim());
                writer.newLine();
            }
            writer.flush();
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
    }

    public void writeConfig(String location, List<String> lines) {
        try {
            BufferedWriter writer = new BufferedWriter(new FileWriter(location));
            for (String line : lines) {
                writer.write(line.trim());
                writer.newLine();
            }
            writer.flush();
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
    }

    public void writeHistory(String name, List<String> lines) {
        try {
            BufferedWriter writer = new BufferedWriter(new FileWriter(name));
            for (String line : lines) {
                writer.write(line.trim());
                writer.newLine();
            }
            writer.flush();
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
    }

    public void writeManifest(String source, List<String> lines) {
        try {
            BufferedWriter writer = new BufferedWriter(new FileWriter(source));
            for (String line : lines) {
                writer.write(line.trim());
                writer.newLine();
            }
            writer.flush();
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
    }
}
